#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "macpoly/macdonald.hpp"

namespace macpoly {

struct Witness {
    XPoly lhs, rhs, difference;
    Witness(XPoly l, XPoly r) : lhs(std::move(l)), rhs(std::move(r)), difference(lhs - rhs) {}
};

struct VerifyReport {
    std::string identity_id;
    std::string instance;
    bool holds = true;
    std::optional<Witness> witness;

    static VerifyReport compare(std::string id, std::string instance, const XPoly& lhs,
                                const XPoly& rhs);
    nlohmann::json to_json() const;
};

/// Complement identity: E_mu^{pi1^c pi2^c}(x; q, t) =
///   q^{-p} E_mu^{pi1 pi2}(x_m,...,x_1, q x_n,...,q x_{m+1}; 1/q, 1/t),
/// p = mu_{m+1} + ... + mu_n. pi2 may be empty (m = n, p = 0), which is the
/// parameter-inversion degeneration.
VerifyReport verify_complement(const Composition& mu, const Perm& pi1, const Perm& pi2);

/// Concha-Lapointe: P_{lambda|gamma}(x_1..x_m, q x_n..q x_{m+1}; 1/q, 1/t)
///   = q^{|gamma|} t^{inv(gamma) - l(w0^[m+1,n])} T_{w0^[m+1,n]} P_{lambda|gamma}.
VerifyReport verify_cl(const Composition& lambda, const Composition& gamma, int n);

/// Kazhdan-Lusztig fixedness: P_{lambda|gamma}^* = t^{inv(lambda|gamma)} P.
VerifyReport verify_kl(const Composition& lambda, const Composition& gamma, int n);

/// The two constructions of E_mu^pi agree (combinatorial vs Hecke).
VerifyReport verify_hhl_vs_hecke(const Composition& mu, const Perm& pi);

/// Y_{-w_m} E_mu = q^{lambda_1+..+lambda_m} t^{-sum b_mu(i)} E_mu.
VerifyReport verify_eigen(const Composition& mu, int m);

/// Per-shape combinatorial lemma bundle at split m: triple coverage,
/// inv/coinv as triple counts, the complement bijection with its maj/coinv
/// transfer identities, and the parameter-inverted combinatorial formula.
VerifyReport verify_combinatorial(const Composition& mu, int m);

struct SweepBounds {
    int n_max = 2;
    int degree_max = 1;
    enum class BasementMode { all, concatenated_only, sampled };
    BasementMode basement_mode = BasementMode::all;
    unsigned long seed = 1;
    int sample_count = 8;
};

struct FamilySummary {
    std::string identity_id;
    long instances = 0;
    long failures = 0;
};

struct SuiteSummary {
    std::vector<FamilySummary> families;
    long total_instances = 0;
    long total_failures = 0;
    double elapsed_seconds = 0.0;  // wall time; kept out of the JSON log
    std::optional<VerifyReport> first_failure;

    bool all_hold() const { return total_failures == 0; }
    int exit_code() const { return all_hold() ? 0 : 1; }
};

/// Run every identity checker over all instances within bounds. Emits one
/// JSON object per line to `log` (per-family counts, any failure reports,
/// and a final summary). `inject_fault` perturbs one coefficient of the
/// first compared polynomial by +1 -- the suite's negative control.
SuiteSummary run_suite(const SweepBounds& bounds, std::ostream* log, bool inject_fault = false);

/// Compositions with the given number of parts and total at most degree_max,
/// ordered by total degree, then lexicographically.
std::vector<Composition> compositions_up_to(int parts, int degree_max);
std::vector<Composition> partitions_up_to(int parts, int degree_max);

/// Concatenated basements pi1 pi2 with pi1 in S_[1,m], pi2 in S_[m+1,n].
std::vector<std::pair<Perm, Perm>> concatenated_basements(int n, int m);

}  // namespace macpoly
