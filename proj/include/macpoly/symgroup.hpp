#pragma once

#include <string>
#include <vector>

namespace macpoly {

/// Composition: finite list of nonnegative integer parts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    static Composition parse(const std::string& text);  // comma-separated

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_.at(static_cast<size_t>(i)); }  // 0-based
    const std::vector<int>& parts() const { return parts_; }

    int total() const;
    bool weakly_decreasing() const;

    Composition prefix(int m) const;          // first m parts
    Composition suffix_from(int m) const;     // parts m+1 .. size
    static Composition concat(const Composition& a, const Composition& b);

    bool operator==(const Composition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Permutation of the integer interval [lo, hi] in one-line notation.
/// The empty interval (hi = lo-1) is the identity of the trivial group.
class Perm {
public:
    Perm() : lo_(1) {}
    Perm(int lo, std::vector<int> images);
    static Perm identity(int lo, int hi);
    static Perm long_element(int lo, int hi);       // i -> lo+hi-i
    static Perm transposition(int lo, int hi, int i);  // sigma_i = (i, i+1)
    // Parse one-line notation: digit string for values <= 9, else
    // comma-separated. The interval is [min value, max value].
    static Perm parse(const std::string& text);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(images_.size()) - 1; }
    int size() const { return static_cast<int>(images_.size()); }
    bool empty() const { return images_.empty(); }

    int operator()(int i) const { return images_.at(static_cast<size_t>(i - lo_)); }
    const std::vector<int>& images() const { return images_; }

    Perm compose(const Perm& rho) const;  // (pi rho)(i) = pi(rho(i))
    Perm inverse() const;
    bool is_identity() const;

    int length() const;  // inversion count
    // Reduced word: indices i with pi = sigma_{i_1} ... sigma_{i_l},
    // produced by the bubble-sort descent algorithm.
    std::vector<int> reduced_word() const;

    Perm complement() const;  // i -> lo+hi-pi(i), stays on [lo,hi]

    // Embed into [lo, hi] acting as the identity outside the home interval.
    Perm extended(int lo, int hi) const;
    // Concatenate pi1 on [a,b] with pi2 on [b+1,c] into one permutation.
    static Perm concatenate(const Perm& a, const Perm& b);
    // Split into blocks [lo,m] and [m+1,hi]; returns false if the
    // permutation does not preserve the two blocks.
    bool split_at(int m, Perm& first, Perm& second) const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return images_ < o.images_; }
    std::string str() const;

private:
    int lo_;
    std::vector<int> images_;
};

/// All permutations of [lo, hi] in lexicographic one-line order.
std::vector<Perm> all_perms(int lo, int hi);

/// Minimal coset representatives S_m^lambda for S_m / (S_m)_lambda:
/// pi with pi(i) < pi(j) whenever i < j and lambda_i = lambda_j.
/// lambda must be weakly decreasing with m parts.
std::vector<Perm> coset_min_reps(const Composition& lambda);

/// Stabilizer (S_m)_lambda = { sigma : sigma(lambda) = lambda }.
std::vector<Perm> stabilizer(const Composition& lambda);

/// The minimal-length element of the coset pi (S_m)_lambda.
Perm coset_underline(const Perm& pi, const Composition& lambda);

/// ell_mu(pi): pairs (i,j), i<j, pi(i)>pi(j), mu_i <= mu_j, over the
/// interval of pi. mu must have as many parts as the interval.
int ell_mu(const Composition& mu, const Perm& pi);

/// inv(c) = #{ i<j : c_i > c_j }.
int inversions(const Composition& c);

/// inv(lambda|gamma) = inv(gamma) + #{ (i,j) : lambda_i > gamma_j }.
int inv_pair(const Composition& lambda, const Composition& gamma);

/// pi(mu) = (mu_{pi^{-1}(1)}, ..., mu_{pi^{-1}(n)}) for pi on [1,n].
Composition act(const Perm& pi, const Composition& mu);

}  // namespace macpoly
