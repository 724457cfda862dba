#ifndef MOMENTLAB_SEQCORE_HPP
#define MOMENTLAB_SEQCORE_HPP

/**
 * @file seqcore.hpp
 * @brief Recursive matrices and Catalan-like numbers generated from (sigma, tau).
 *
 * The recursive matrix R = [r_{n,k}] is lower triangular with
 *
 *     r_{0,0} = 1,  r_{n+1,k} = r_{n,k-1} + s_k r_{n,k} + t_{k+1} r_{n,k+1},
 *
 * and its first column r_{n,0} is the sequence of Catalan-like numbers for
 * (sigma, tau). Everything here is exact rational arithmetic.
 */

#include "momentlab/rational.hpp"
#include "momentlab/surd.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace momentlab {

/// (p, s; q, t): sigma = (p, s, s, ...), tau = (q, t, t, ...).
struct Shorthand {
    Rational p, s, q, t;
};

/**
 * @brief The pair (sigma, tau) in eventually-constant form.
 *
 * sigma = (s_0, ..., s_j, s, s, ...) and tau = (t_1, ..., t_i, t, t, ...).
 * tau is indexed from 1 as in the recurrence; tau_prefix()[0] holds t_1.
 * Every tau entry must be nonzero (quasi-definite case).
 */
class SigmaTauSpec {
public:
    /// Throws ZeroTau if any tau entry is zero.
    SigmaTauSpec(std::vector<Rational> sigma_prefix, Rational sigma_tail,
                 std::vector<Rational> tau_prefix, Rational tau_tail);

    /// s_k for k >= 0.
    const Rational& s(std::size_t k) const;
    /// t_k for k >= 1.
    const Rational& t(std::size_t k) const;

    const std::vector<Rational>& sigma_prefix() const noexcept { return sigma_prefix_; }
    const Rational& sigma_tail() const noexcept { return sigma_tail_; }
    const std::vector<Rational>& tau_prefix() const noexcept { return tau_prefix_; }
    const Rational& tau_tail() const noexcept { return tau_tail_; }

    /// True iff every tau entry is positive.
    bool positive_case() const noexcept { return positive_case_; }
    /// Present when both prefixes have length at most one.
    std::optional<Shorthand> shorthand() const;

    friend bool operator==(const SigmaTauSpec& a, const SigmaTauSpec& b);

private:
    std::vector<Rational> sigma_prefix_;
    Rational sigma_tail_;
    std::vector<Rational> tau_prefix_;
    Rational tau_tail_;
    bool positive_case_ = false;
};

/// sigma = (p, s, s, ...), tau = (q, t, t, ...). Throws ZeroTau if q or t is 0.
SigmaTauSpec make_spec(const Rational& p, const Rational& s, const Rational& q, const Rational& t);

/// Lower-triangular recursive matrix of order n_max; entries above the
/// diagonal are implicitly zero.
class RecursiveMatrix {
public:
    explicit RecursiveMatrix(std::vector<std::vector<Rational>> rows);

    std::size_t order() const noexcept { return rows_.size() - 1; }
    /// r_{n,k}; zero when k > n.
    Rational operator()(std::size_t n, std::size_t k) const;
    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }

private:
    std::vector<std::vector<Rational>> rows_;
};

RecursiveMatrix recursive_matrix(const SigmaTauSpec& spec, std::size_t n_max);

enum class Origin { catalog, recursive_matrix, transform, external };

std::string_view to_string(Origin origin);

/// Finite prefix y_0..y_N of a sequence, with provenance.
class Sequence {
public:
    /// Throws InvalidArgument when values is empty.
    explicit Sequence(std::vector<Rational> values, std::string label = {},
                      Origin origin = Origin::external);

    std::size_t size() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t n) const { return values_[n]; }
    const Rational& at(std::size_t n) const { return values_.at(n); }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }
    Origin origin() const noexcept { return origin_; }

    /// Interval known to contain the support of a representing measure.
    const std::optional<Interval>& support() const noexcept { return support_; }
    Sequence& set_support(std::optional<Interval> support) {
        support_ = std::move(support);
        return *this;
    }

    /// Throws InsufficientData unless at least `count` values are present.
    void require(std::size_t count) const;

    friend bool operator==(const Sequence& a, const Sequence& b) { return a.values_ == b.values_; }

private:
    std::vector<Rational> values_;
    std::string label_;
    Origin origin_;
    std::optional<Interval> support_;
};

/// Column 0 of recursive_matrix(spec, n_max): n_max + 1 values.
Sequence catalan_like(const SigmaTauSpec& spec, std::size_t n_max, std::string label = {});

struct CatalogEntry {
    SigmaTauSpec spec;
    Sequence sequence;
};

/// catalan, shifted_catalan, motzkin, central_binomial, central_trinomial,
/// delannoy, schroder_large, schroder_little, fine, riordan, hexagonal.
const std::vector<std::string>& catalog_names();

/// Throws UnknownName.
SigmaTauSpec catalog_spec(std::string_view name);

/// Throws UnknownName.
CatalogEntry catalog_sequence(std::string_view name, std::size_t n_max);

}  // namespace momentlab

#endif
