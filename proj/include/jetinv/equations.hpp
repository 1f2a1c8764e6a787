#pragma once

#include <cstdint>
#include <map>

#include "jetinv/jetpoint.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/ratfun.hpp"

namespace jetinv {

/// A jet point satisfying all prolonged constraints of |grad u| = 1 up to its
/// order: |v|^2 = 1, Av = 0, Q3(v,.,.) = -<A., A.> and the order-4 analogue,
/// all exact. Carries the rational orthonormal basis used in construction
/// (column 0 is v), which the restricted-frame operations reuse.
struct EikonalSample {
    JetPoint jet;
    QMat w; // orthonormal columns, w[:,0] = grad u
};

/// Seeded random exact sample of the prolonged eikonal equation, k <= 4.
/// Resamples internally until the restricted quadric has a simple spectrum.
EikonalSample eikonal_sample(int n, int k, std::uint64_t seed);

/// Exact residuals of the prolonged constraints D^zeta(|grad u|^2 - 1) at the
/// sample, computed by formal total derivatives of the defining polynomial
/// (independent of the construction). All must vanish.
std::vector<Rat> eikonal_constraint_residuals(const JetPoint& j);

/// Singular-orbit vanishing checks on E.
struct VanishingReport {
    bool det_a_zero = false;
    bool i2_pair_zero = false;   // I_{2,(i)} = 0 for all i >= 1
    bool is_pair_zero = false;   // Is_pair = 0 whenever an index is positive
    bool v_fields_zero = false;  // v_2..v_n coefficient vectors vanish
    bool gram_singular = false;
    Rat e1_i0;                   // v . I0, equals 1 on E
    QVec trace_witness;          // Tr(A^i), i = 1..n-1 (generically nonzero)

    bool all_pass() const {
        return det_a_zero && i2_pair_zero && is_pair_zero && v_fields_zero && gram_singular &&
               e1_i0 == Rat(1);
    }
};

VanishingReport verify_singular_vanishing(const EikonalSample& s);

/// Restricted invariants on E: I0, traces of A, the adapted frame e_1 = v,
/// e_2..e_n (eigenvectors of A on the orthogonal complement of v), and the
/// pure-order coefficients q_zeta = Q_k(e_{i_1},...,e_{i_k}) over frame
/// letters >= 2.
struct EikonalInvariants {
    Rat i0;
    QVec traces;          // Tr(A^i), i = 1..n-1, exact
    DVec lambda;          // restricted eigenvalues, ascending (n-1 values)
    DMat frame;           // frame[i][k]: component i of e_{k+1}; column 0 is v
    std::map<std::string, double> q;         // key "i1,...,ik" with letters 2..n
    std::map<std::string, double> q_squared; // sign-free versions
    std::map<int, int> count_per_order;      // #q_zeta of each pure order
};

EikonalInvariants eikonal_invariants(const EikonalSample& s);

/// Numeric Christoffel diagnostics of the adapted frame on E.
struct ChristoffelReport {
    std::vector<std::vector<std::vector<double>>> gamma; // Gamma_ij^k
    double max_nabla_q2_residual = 0;  // frame check of the identity nabla Q2 = Q3
    double max_spectral_residual = 0;   // spectral formula for q_{ijk} vs direct Q3 values
    double max_torsion_residual = 0;   // c_ij^k - (Gamma_ij^k - Gamma_ji^k)
};

/// Finite differences of the adapted frame (step h with one Richardson
/// halving); needs order >= 3.
ChristoffelReport christoffel_check(const EikonalSample& s, double h = 1e-5);

/// Pole configuration for the compatibility analysis: f(u) = sum 1/(u-a_i).
struct CompatConfig {
    int n = 0;
    std::vector<Rat> alphas; // pairwise distinct, at most n of them

    void validate() const;
    RatFun f() const;
};

/// (D+f)^k applied to g, exact: g -> g' + f g iterated.
RatFun dplusf_iterate(const RatFun& f, RatFun g, int k);

/// (D+f)^k(1) for the configuration's f.
RatFun dplusf_power(const CompatConfig& cfg, int k);

/// Conjugation route: (D+f)^k(1) = P^{(k)}/P with P = prod(u - a_i).
RatFun dplusf_power_conjugation(const CompatConfig& cfg, int k);

/// True iff (D+f)^{n+1}(1) = 0 identically and (D+f)^m(1) != 0 for the m
/// supplied poles (sharpness).
bool verify_ode(const CompatConfig& cfg);

/// Spectrum identities at a sample point u0 (not a pole): with
/// lambda_i = 1/(u0 - a_i), padded with zeros to n values, checks
/// E_k(lambda) = (D+f)^k(1)(u0)/k! and the power-sum chain S1 = f,
/// S2 = -f', S3 = f''/2, S4 = -f'''/6. All exact.
struct SpectrumReport {
    std::vector<Rat> lambda;      // padded to n
    std::vector<Rat> e_direct;    // elementary symmetric of lambda
    std::vector<Rat> e_from_ode;  // (D+f)^k(1)(u0)/k!
    bool elementary_match = false;
    bool power_sums_match = false;
    int distinct_lambda = 0;
    int expected_distinct = 0;
};

SpectrumReport spectrum_identities(const CompatConfig& cfg, const Rat& u0);

} // namespace jetinv
