#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "paircert/errors.hpp"

namespace paircert {

using cx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// A two-qubit density matrix. Basis ordering is |VV>,|VH>,|HV>,|HH>
// throughout the project ("0" = V, "1" = H), so single-qubit component 0 is
// the V amplitude and component 1 is the H amplitude. Two-qubit indices are
// the standard Kronecker indices of that single-qubit order.
using DensityMatrix = Mat4;

using StateVector2 = Vec2;
using StateVector4 = Vec4;

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kTsirelson = 2.0 * kSqrt2;

// Polarization analysis bases: horizontal, vertical, diagonal (+),
// anti-diagonal (-), left- and right-circular.
enum class Pol { H, V, D, A, L, R };

inline constexpr Pol kAllPols[6] = {Pol::H, Pol::V, Pol::D, Pol::A, Pol::L, Pol::R};

char pol_to_char(Pol p);
Pol pol_from_char(char c);         // throws InputError on unknown label
Pol pol_from_string(const std::string& s);

// A +/-1-valued single-qubit observable given by a unit Bloch vector: the
// coefficients of its Pauli decomposition sum_k bloch[k] sigma_k.
struct Observable {
    Eigen::Vector3d bloch;
};

// Dominant eigenstate of a density matrix together with its eigenvalue,
// which equals the fidelity between the state and the matrix.
struct PureStateReport {
    Vec4 state;
    double fidelity_with_rho = 0.0;
};

struct PhysicalityTolerances {
    double hermitian = 1e-10;
    double trace = 1e-10;
    double psd = 1e-9;  // eigenvalues >= -psd
};

// Verdict of the physicality check; lists every violated invariant.
struct PhysicalityReport {
    bool ok = false;
    double hermitian_deviation = 0.0;  // max |rho - rho^dagger|
    double trace_deviation = 0.0;      // |Tr(rho) - 1|
    double min_eigenvalue = 0.0;
    std::vector<std::string> violations;
};

// ---- elementary constructions ------------------------------------------

// Pauli matrix sigma_k, k in {1,2,3}.
Mat2 pauli(int k);

// Normalized single-qubit ket for a polarization label, components (V, H):
//   H = |H>, V = |V>, D = (|H>+|V>)/sqrt2, A = (|H>-|V>)/sqrt2,
//   L = (|H>+i|V>)/sqrt2, R = (|H>-i|V>)/sqrt2.
Vec2 basis_ket(Pol p);

// Kronecker product with row-major block convention; tensor(a, b) applied
// to kets keeps the first argument as the most-significant index, matching
// the |VV>,|VH>,|HV>,|HH> ordering.
Eigen::MatrixXcd tensor(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

Vec4 tensor_ket(const Vec2& a, const Vec2& b);

// Rank-1 projector |X,Y><X,Y| for a pair of polarization labels.
Mat4 projector(Pol x, Pol y);

// ---- named two-qubit states ---------------------------------------------

// Singlet |psi-> = (|HV> - |VH>)/sqrt2.
Vec4 singlet_ket();
Mat4 singlet_projector();

Vec4 product_ket(Pol x, Pol y);

// ---- physicality ---------------------------------------------------------

PhysicalityReport is_physical(const Mat4& m, const PhysicalityTolerances& tol = {});
PhysicalityReport is_physical(const Mat4& m, double tol);

// Throws PhysicalityError (listing all violations) unless m passes is_physical.
void require_physical(const Mat4& m, const PhysicalityTolerances& tol = {});

// ---- state functionals ----------------------------------------------------

// Tr(rho^2), in [1/4, 1] for a physical two-qubit state.
double purity(const DensityMatrix& rho);

// <psi| rho |psi> for a pure target.
double fidelity(const DensityMatrix& rho, const Vec4& target);

// Jozsa fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; symmetric in its
// arguments.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Eigenvector of the largest eigenvalue, with the global phase fixed so the
// largest-magnitude amplitude is real and non-negative. Throws
// DegenerateSpectrumError when the top eigenvalue is degenerate within 1e-9.
PureStateReport dominant_eigenstate(const DensityMatrix& rho);

// Hermitian, traceless 2x2 matrix of an Observable; eigenvalues are +/-1.
// Throws std::invalid_argument when the Bloch vector is not unit length.
Mat2 observable_matrix(const Observable& obs);

// ---- serialization --------------------------------------------------------

// JSON object {dim: 4, re: [16 row-major], im: [16 row-major],
// basis: "VV,VH,HV,HH"}. All reals are written at 17 significant digits.
std::string density_matrix_to_json(const DensityMatrix& rho);

// Parses the object above; throws InputError on malformed input. The result
// is not physicality-checked (callers decide which tolerances apply).
DensityMatrix density_matrix_from_json(const std::string& text);

}  // namespace paircert
