#include "macpoly/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macpoly {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("Composition: negative part");
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    }
    return Composition(std::move(parts));
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::weakly_decreasing() const {
    return std::is_sorted(parts_.rbegin(), parts_.rend());
}

Composition Composition::prefix(int m) const {
    return Composition(std::vector<int>(parts_.begin(), parts_.begin() + m));
}

Composition Composition::suffix_from(int m) const {
    return Composition(std::vector<int>(parts_.begin() + m, parts_.end()));
}

Composition Composition::concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return Composition(std::move(parts));
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Perm::Perm(int lo, std::vector<int> images) : lo_(lo), images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != lo_ + static_cast<int>(k))
            throw std::invalid_argument("Perm: images are not a permutation of the interval");
}

Perm Perm::identity(int lo, int hi) {
    std::vector<int> im;
    for (int i = lo; i <= hi; ++i) im.push_back(i);
    return Perm(lo, std::move(im));
}

Perm Perm::long_element(int lo, int hi) {
    std::vector<int> im;
    for (int i = lo; i <= hi; ++i) im.push_back(lo + hi - i);
    return Perm(lo, std::move(im));
}

Perm Perm::transposition(int lo, int hi, int i) {
    if (i < lo || i >= hi) throw std::invalid_argument("Perm::transposition: index out of range");
    Perm p = identity(lo, hi);
    std::swap(p.images_[i - lo], p.images_[i - lo + 1]);
    return p;
}

Perm Perm::parse(const std::string& text) {
    std::vector<int> im;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) im.push_back(std::stoi(item));
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("Perm::parse: expected digits or comma-separated list");
            im.push_back(ch - '0');
        }
    }
    if (im.empty()) return Perm();
    int lo = *std::min_element(im.begin(), im.end());
    return Perm(lo, std::move(im));
}

Perm Perm::compose(const Perm& rho) const {
    if (lo_ != rho.lo_ || size() != rho.size())
        throw std::invalid_argument("Perm::compose: interval mismatch");
    std::vector<int> im(images_.size());
    for (int i = lo_; i <= hi(); ++i) im[i - lo_] = (*this)(rho(i));
    return Perm(lo_, std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = lo_; i <= hi(); ++i) im[(*this)(i)-lo_] = i;
    return Perm(lo_, std::move(im));
}

bool Perm::is_identity() const {
    for (int i = lo_; i <= hi(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

int Perm::length() const {
    int count = 0;
    for (size_t i = 0; i < images_.size(); ++i)
        for (size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++count;
    return count;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> w = images_;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                std::swap(w[p], w[p + 1]);
                word.push_back(lo_ + static_cast<int>(p));
                moved = true;
            }
        }
    }
    // w * s_{i_1} * ... * s_{i_l} = id, hence pi = s_{i_l} ... s_{i_1}
    std::reverse(word.begin(), word.end());
    return word;
}

Perm Perm::complement() const {
    std::vector<int> im(images_.size());
    for (size_t k = 0; k < images_.size(); ++k) im[k] = lo_ + hi() - images_[k];
    return Perm(lo_, std::move(im));
}

Perm Perm::extended(int lo, int hi) const {
    if (lo > lo_ || (hi < this->hi() && !empty()))
        throw std::invalid_argument("Perm::extended: target interval too small");
    std::vector<int> im;
    for (int i = lo; i <= hi; ++i)
        im.push_back((!empty() && i >= lo_ && i <= this->hi()) ? (*this)(i) : i);
    return Perm(lo, std::move(im));
}

Perm Perm::concatenate(const Perm& a, const Perm& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (b.lo_ != a.hi() + 1)
        throw std::invalid_argument("Perm::concatenate: intervals are not adjacent");
    std::vector<int> im = a.images_;
    im.insert(im.end(), b.images_.begin(), b.images_.end());
    return Perm(a.lo_, std::move(im));
}

bool Perm::split_at(int m, Perm& first, Perm& second) const {
    if (m < lo_ - 1 || m > hi()) return false;
    std::vector<int> a, b;
    for (int i = lo_; i <= hi(); ++i) {
        int v = (*this)(i);
        if (i <= m) {
            if (v > m) return false;
            a.push_back(v);
        } else {
            if (v <= m) return false;
            b.push_back(v);
        }
    }
    first = a.empty() ? Perm() : Perm(lo_, std::move(a));
    second = b.empty() ? Perm() : Perm(m + 1, std::move(b));
    return true;
}

std::string Perm::str() const {
    bool digits = hi() <= 9 && lo_ >= 1;
    std::ostringstream os;
    for (size_t k = 0; k < images_.size(); ++k) {
        if (!digits && k) os << ",";
        os << images_[k];
    }
    return os.str();
}

std::vector<Perm> all_perms(int lo, int hi) {
    if (hi < lo) return {Perm()};
    std::vector<int> im;
    for (int i = lo; i <= hi; ++i) im.push_back(i);
    std::vector<Perm> out;
    do {
        out.emplace_back(lo, im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Perm> coset_min_reps(const Composition& lambda) {
    if (!lambda.weakly_decreasing())
        throw std::invalid_argument("coset_min_reps: lambda must be weakly decreasing");
    int m = lambda.size();
    std::vector<Perm> out;
    for (const Perm& pi : all_perms(1, m)) {
        bool ok = true;
        for (int i = 1; ok && i <= m; ++i)
            for (int j = i + 1; ok && j <= m; ++j)
                if (lambda[i - 1] == lambda[j - 1] && pi(i) > pi(j)) ok = false;
        if (ok) out.push_back(pi);
    }
    return out;
}

std::vector<Perm> stabilizer(const Composition& lambda) {
    int m = lambda.size();
    std::vector<Perm> out;
    for (const Perm& s : all_perms(1, m)) {
        bool ok = true;
        for (int i = 1; i <= m; ++i)
            if (lambda[s(i) - 1] != lambda[i - 1]) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

Perm coset_underline(const Perm& pi, const Composition& lambda) {
    const Perm* best = nullptr;
    int best_len = 0;
    std::vector<Perm> coset;
    for (const Perm& s : stabilizer(lambda)) coset.push_back(pi.compose(s));
    for (const Perm& c : coset) {
        int len = c.length();
        if (!best || len < best_len) {
            best = &c;
            best_len = len;
        }
    }
    return *best;
}

int ell_mu(const Composition& mu, const Perm& pi) {
    if (mu.size() != pi.size() && !pi.empty())
        throw std::invalid_argument("ell_mu: composition/permutation size mismatch");
    int count = 0;
    for (int i = pi.lo(); i <= pi.hi(); ++i)
        for (int j = i + 1; j <= pi.hi(); ++j)
            if (pi(i) > pi(j) && mu[i - pi.lo()] <= mu[j - pi.lo()]) ++count;
    return count;
}

int inversions(const Composition& c) {
    int count = 0;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (c[i] > c[j]) ++count;
    return count;
}

int inv_pair(const Composition& lambda, const Composition& gamma) {
    int count = inversions(gamma);
    for (int i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < gamma.size(); ++j)
            if (lambda[i] > gamma[j]) ++count;
    return count;
}

Composition act(const Perm& pi, const Composition& mu) {
    if (pi.empty()) return mu;
    if (mu.size() != pi.size()) throw std::invalid_argument("act: size mismatch");
    Perm inv = pi.inverse();
    std::vector<int> parts(static_cast<size_t>(mu.size()));
    for (int i = pi.lo(); i <= pi.hi(); ++i) parts[i - pi.lo()] = mu[inv(i) - pi.lo()];
    return Composition(std::move(parts));
}

}  // namespace macpoly
