#pragma once

#include "qsc/congruence.hpp"
#include "qsc/theorems.hpp"

namespace qsc {

/// Evaluation point of the certificate pair. F and G use the convention
/// 1/(q^d;q^d)_m = 0 for negative m, so points with m - k < 0 map to the
/// zero rational function.
struct WZPoint {
    long m = 0;
    long k = 0;
    long d = 2;
    long r = 1;
};

/// F(m,k) = (-1)^k q^{dk(k-2m-1)/2+(d-2r)m} [2dm+r]
///          (q^r;q^d)_m^3 (q^r;q^d)_{m+k}
///          / ((q^d;q^d)_m^3 (q^d;q^d)_{m-k} (q^r;q^d)_k^2).
RatFunc wz_f(const WZPoint& pt);

/// G(m,k) = (-1)^{k-1} q^{dk(k-2m+1)/2+(d-2r)(m-1)}
///          (q^r;q^d)_m^3 (q^r;q^d)_{m+k-1}
///          / ((1-q)^2 (q^d;q^d)_{m-1}^3 (q^d;q^d)_{m-k} (q^r;q^d)_k^2).
RatFunc wz_g(const WZPoint& pt);

/// [dk-d+r] F(m,k-1) - [dk-d+2r] F(m,k) == G(m+1,k) - G(m,k), exactly.
bool verify_wz_recurrence(const WZPoint& pt);

/// The double-telescoped identity: with L = (N-r)/d,
/// sum_{m=0}^{L} F(m,0) == F(L,L) prod_{j=1}^{L} [dj-d+2r]/[dj-d+r]
///   + sum_{k=1}^{L} G(L+1,k) prod_{j=1}^{k-1} [dj-d+2r]/[dj-d+r] / [dk-d+r].
bool verify_telescoping(long n, long d, long r, Variant variant);

/// (1-q^{n-kd})(1-q^{n+kd}) + (1-q^{kd})^2 q^{n-kd}
///   - q^n(1-q^n)^2 - q^n(1-q^n)^3 == (1-q^n)^4.
bool verify_quartic_identity(long n, long kd);

/// Boundary-term congruence: with N = n (Variant::N) or (d-1)n (Variant::DN)
/// and L = (N-r)/d,
/// q^{(N-r)(d-N-3r)/2d} [2N-r] (q^r;q^d)_{2L} / (q^d;q^d)_L^2
///   == (-1)^L q^{r(r-N)/d} ([N] - ([N]^3 + [N]^4(1-q)) sum q^{kd}/[kd]^2)
/// modulo [n] Phi_n(q)^4.
CongruenceReport verify_lemma_F(Variant variant, long n, long d, long r);

/// The inner product-form congruence modulo Phi_n(q)^4:
/// (q^r;q^d)_L (q^{n+d};q^d)_L / (q^d;q^d)_L^2
///   == (-1)^L q^{(n-r)(n-d+r)/2d} (1 - ([n]^2 + [n]^3(1-q)) sum q^{kd}/[kd]^2).
CongruenceReport verify_F_mid(long n, long d, long r);

/// The weighted G-term congruence, verified as the two independent checks
/// the modulus splits into: (i) modulo Phi_n(q)^5 against
/// q^{(kd-d-2N+2r)(d-N)/d} [N]^4 (q^d;q^d)_k (q^{2r};q^d)_{k-1}
///   / ([dk][dk-d+r]^2 (q^r;q^d)_k (q^r;q^d)_{k-1}),
/// and (ii) both sides congruent to 0 modulo [n] alone.
CongruenceReport verify_G_congruence(long n, long d, long r, long k, Variant variant);

/// (q^d;q^d)_k (q^{2r};q^d)_{k-1} / ([dk][dk-d+r]^2 (q^r;q^d)_k (q^r;q^d)_{k-1})
///   == (q^d;q^d)_{k-1} (q^{2r};q^d)_{k-1} / ([dk-d+r]^3 (q^r;q^d)_{k-1}^2).
bool verify_iden(long d, long r, long k);

}  // namespace qsc
