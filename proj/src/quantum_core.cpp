#include "paircert/quantum_core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace paircert {

namespace {

constexpr cx kI{0.0, 1.0};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

char pol_to_char(Pol p) {
    switch (p) {
        case Pol::H: return 'H';
        case Pol::V: return 'V';
        case Pol::D: return 'D';
        case Pol::A: return 'A';
        case Pol::L: return 'L';
        case Pol::R: return 'R';
    }
    return '?';
}

Pol pol_from_char(char c) {
    switch (c) {
        case 'H': case 'h': return Pol::H;
        case 'V': case 'v': return Pol::V;
        case 'D': case 'd': case '+': return Pol::D;
        case 'A': case 'a': case '-': return Pol::A;
        case 'L': case 'l': return Pol::L;
        case 'R': case 'r': return Pol::R;
        default:
            throw InputError(std::string("unknown polarization label '") + c +
                             "' (expected one of H,V,D,A,L,R)");
    }
}

Pol pol_from_string(const std::string& s) {
    if (s.size() != 1) throw InputError("unknown polarization label '" + s + "'");
    return pol_from_char(s[0]);
}

Mat2 pauli(int k) {
    Mat2 m;
    switch (k) {
        case 1:
            m << 0, 1,
                 1, 0;
            return m;
        case 2:
            m << 0, -kI,
                 kI, 0;
            return m;
        case 3:
            m << 1, 0,
                 0, -1;
            return m;
        default:
            throw std::out_of_range("pauli index must be 1, 2 or 3");
    }
}

Vec2 basis_ket(Pol p) {
    const double s = 1.0 / kSqrt2;
    Vec2 v;
    switch (p) {
        case Pol::H: v << 0, 1; break;
        case Pol::V: v << 1, 0; break;
        case Pol::D: v << s, s; break;
        case Pol::A: v << -s, s; break;
        case Pol::L: v << kI * s, s; break;
        case Pol::R: v << -kI * s, s; break;
    }
    return v;
}

Eigen::MatrixXcd tensor(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec4 tensor_ket(const Vec2& a, const Vec2& b) {
    Vec4 v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return v;
}

Mat4 projector(Pol x, Pol y) {
    const Vec4 k = tensor_ket(basis_ket(x), basis_ket(y));
    return k * k.adjoint();
}

Vec4 singlet_ket() {
    // (|HV> - |VH>)/sqrt2; indices 2 and 1 in the VV,VH,HV,HH order.
    Vec4 v = Vec4::Zero();
    v(2) = 1.0 / kSqrt2;
    v(1) = -1.0 / kSqrt2;
    return v;
}

Mat4 singlet_projector() {
    const Vec4 s = singlet_ket();
    return s * s.adjoint();
}

Vec4 product_ket(Pol x, Pol y) { return tensor_ket(basis_ket(x), basis_ket(y)); }

PhysicalityReport is_physical(const Mat4& m, const PhysicalityTolerances& tol) {
    PhysicalityReport rep;
    rep.hermitian_deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    rep.trace_deviation = std::abs(m.trace() - cx{1.0, 0.0});

    if (rep.hermitian_deviation > tol.hermitian) {
        std::ostringstream os;
        os << "not Hermitian: max|rho - rho^dagger| = " << rep.hermitian_deviation
           << " > " << tol.hermitian;
        rep.violations.push_back(os.str());
    }
    if (rep.trace_deviation > tol.trace) {
        std::ostringstream os;
        os << "trace != 1: |Tr(rho) - 1| = " << rep.trace_deviation << " > " << tol.trace;
        rep.violations.push_back(os.str());
    }

    // Eigenvalues of the Hermitian part; meaningful even when the
    // Hermiticity check already failed.
    const Mat4 herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> es(herm, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = es.eigenvalues().minCoeff();
    if (rep.min_eigenvalue < -tol.psd) {
        std::ostringstream os;
        os << "not PSD: min eigenvalue = " << rep.min_eigenvalue << " < " << -tol.psd;
        rep.violations.push_back(os.str());
    }

    rep.ok = rep.violations.empty();
    return rep;
}

PhysicalityReport is_physical(const Mat4& m, double tol) {
    return is_physical(m, PhysicalityTolerances{tol, tol, 10.0 * tol});
}

void require_physical(const Mat4& m, const PhysicalityTolerances& tol) {
    const PhysicalityReport rep = is_physical(m, tol);
    if (rep.ok) return;
    std::string msg = "density matrix is not physical:";
    for (const auto& v : rep.violations) msg += " [" + v + "]";
    throw PhysicalityError(msg, rep.violations);
}

double purity(const DensityMatrix& rho) {
    require_physical(rho);
    return (rho * rho).trace().real();
}

double fidelity(const DensityMatrix& rho, const Vec4& target) {
    require_physical(rho);
    const double n = target.squaredNorm();
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("fidelity: target ket is not normalized");
    const double f = (target.adjoint() * rho * target)(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

namespace {

// Hermitian square root via eigendecomposition, negative jitter clipped.
Mat4 herm_sqrt(const Mat4& m) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(m);
    Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_physical(rho);
    require_physical(sigma);
    const Mat4 sr = herm_sqrt(rho);
    const Mat4 inner = sr * sigma * sr;
    Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
    const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(tr * tr, 0.0, 1.0);
}

PureStateReport dominant_eigenstate(const DensityMatrix& rho) {
    require_physical(rho);
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
    // Eigen sorts ascending; top eigenvalue last.
    const double top = es.eigenvalues()(3);
    const double gap = top - es.eigenvalues()(2);
    if (gap <= 1e-9)
        throw DegenerateSpectrumError(
            "dominant eigenstate is ambiguous: top eigenvalue degenerate (gap " +
            std::to_string(gap) + ")");

    Vec4 v = es.eigenvectors().col(3);
    // Fix the global phase: largest-magnitude amplitude real non-negative,
    // ties broken by the lowest index.
    int imax = 0;
    double amax = -1.0;
    for (int i = 0; i < 4; ++i) {
        const double a = std::abs(v(i));
        if (a > amax + 1e-15) {
            amax = a;
            imax = i;
        }
    }
    if (amax > 0.0) v *= std::conj(v(imax)) / std::abs(v(imax));
    v.normalize();

    return PureStateReport{v, top};
}

Mat2 observable_matrix(const Observable& obs) {
    const double n = obs.bloch.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("observable Bloch vector must be unit length (norm " +
                                    std::to_string(n) + ")");
    Mat2 m = Mat2::Zero();
    for (int k = 1; k <= 3; ++k) m += obs.bloch(k - 1) * pauli(k);
    return m;
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
    std::string out = "{\n  \"dim\": 4,\n  \"re\": [";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i || j) out += ", ";
            out += fmt17(rho(i, j).real());
        }
    out += "],\n  \"im\": [";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i || j) out += ", ";
            out += fmt17(rho(i, j).imag());
        }
    out += "],\n  \"basis\": \"VV,VH,HV,HH\"\n}\n";
    return out;
}

DensityMatrix density_matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid density matrix JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("density matrix JSON must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() != 4)
        throw InputError("density matrix JSON must have dim = 4");
    if (!j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array() ||
        j["re"].size() != 16 || j["im"].size() != 16)
        throw InputError("density matrix JSON needs 're' and 'im' arrays of 16 numbers");
    if (j.contains("basis") && j["basis"].get<std::string>() != "VV,VH,HV,HH")
        throw InputError("unsupported basis ordering '" + j["basis"].get<std::string>() +
                         "' (expected \"VV,VH,HV,HH\")");

    DensityMatrix rho;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const std::size_t idx = static_cast<std::size_t>(4 * i + k);
            if (!j["re"][idx].is_number() || !j["im"][idx].is_number())
                throw InputError("density matrix JSON entries must be numbers");
            rho(i, k) = cx{j["re"][idx].get<double>(), j["im"][idx].get<double>()};
        }
    return rho;
}

}  // namespace paircert
