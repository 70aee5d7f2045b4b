#pragma once

#include <string>
#include <vector>

#include "aaee/dynamics.hpp"

namespace aaee {

struct OracleReport {
    std::string name;
    double max_rel_error = 0.0;
    bool pass = false;
    double calibration = 0.0;
};

struct FdPair {
    double lhs = 0.0;  // centered finite difference of the energy
    double rhs = 0.0;  // claimed functional-derivative pairing
};

/// Directional derivative of the kinetic energy in u against the momentum
/// pairing <(1 - alpha^2 C) u, direction>. The finite difference uses a
/// scale-relative step with Richardson extrapolation (h and h/2).
/// Rejects a zero direction.
FdPair fd_dL_du(const VectorField& u, const SymTensorField& F, double alpha,
                const VectorField& direction);

/// Directional derivative of the kinetic energy in F against
/// <2 alpha^2 (Def u)^2, direction> in the tensor pairing.
FdPair fd_dL_dF(const VectorField& u, const SymTensorField& F, double alpha,
                const SymTensorField& direction);

/// The diamond pairing of a covariant tensor against F:
///   [K <> F]_k = d_i(F^ij K_kj) - (1/2) F^ij K_ij,k,
/// the adjoint of u -> Lie_u F in the tensor pairing.
VectorField diamond(const SymTensorField& K, const SymTensorField& F);

/// |<K<>F, u> - <Lie_u F, K>| scaled by the natural magnitudes of both sides;
/// u must be divergence-free.
double diamond_residual(const SymTensorField& K, const SymTensorField& F,
                        const VectorField& u);

/// Plain Euler tendency P(-u . grad u), coded independently of the averaged
/// model machinery; reduction oracle for alpha = 0.
VectorField euler_rhs_reference(const VectorField& u);

/// Runs the two reduction comparisons (alpha = 0 vs the Euler reference and
/// F = identity vs the isotropic reference) and reports the larger relative
/// discrepancy.
OracleReport reduction_checks(const VectorField& u, double alpha);

/// Normalization constant of the tensor operator measured from the energy
/// functional; equals 1 for the implemented operator.
double calibration_constant(const VectorField& u, const SymTensorField& F, double alpha,
                            const VectorField& direction);

/// Full verification suite at the given grid size (deterministic given the
/// seed): functional derivatives, diamond duality, reductions, operator
/// self-adjointness/positivity, and grid/alpha independence of the
/// calibration constant.
std::vector<OracleReport> run_oracle_suite(int n, double alpha, std::uint64_t seed);

}  // namespace aaee
