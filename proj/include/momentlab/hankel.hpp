#ifndef MOMENTLAB_HANKEL_HPP
#define MOMENTLAB_HANKEL_HPP

/**
 * @file hankel.hpp
 * @brief Exact Hankel linear algebra and moment-class classification.
 *
 * y is a Hamburger moment sequence iff every H_m(y) = [y_{i+j}] is positive
 * semidefinite; Stieltjes iff additionally every shifted H~_m(y) = [y_{i+j+1}]
 * is; and an [a,b]-moment sequence iff H_m(y) and the localizing matrix
 * (a+b) H_m(Ey) - H_m(E^2 y) - ab H_m(y) are. Only finite orders can be
 * checked, so every verdict here is "verified up to order m".
 */

#include "momentlab/rational.hpp"
#include "momentlab/seqcore.hpp"
#include "momentlab/surd.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace momentlab {

/// Dense symmetric matrix with exact entries.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t dim);
    /// Throws InvalidArgument unless rows form an exactly symmetric square matrix.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    /// Sets entries (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const Rational& value);

    Rational quadratic_form(std::span<const Rational> v) const;
    std::vector<std::vector<Rational>> rows() const;

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }

private:
    std::size_t dim_;
    std::vector<Rational> a_;
};

/// Entry (i,j) = y_{i+j+shift}, 0 <= i,j <= m. Needs 2m+1+shift values.
SymMatrix hankel_matrix(const Sequence& y, std::size_t m, std::size_t shift = 0);

/// Exact determinant of a square matrix by fraction-free (Bareiss)
/// elimination with row pivoting on zero pivots.
Rational determinant(std::vector<std::vector<Rational>> rows);
Rational determinant(const SymMatrix& m);

/// Delta_m(y) = det H_m(y). Needs 2m+1 values.
Rational hankel_det(const Sequence& y, std::size_t m);

enum class PsdStatus { positive_definite, positive_semidefinite_singular, indefinite };

std::string_view to_string(PsdStatus status);

/**
 * Outcome of psd_status. `pivots` are the diagonal entries of the exact
 * congruence M ~ diag(pivots) produced by symmetric diagonal pivoting, in
 * elimination order (zero pivots are not recorded; the rank is the number of
 * pivots). When indefinite, `witness` holds v with v^T M v < 0.
 */
struct PsdVerdict {
    PsdStatus status = PsdStatus::positive_definite;
    std::vector<Rational> pivots;
    std::vector<std::size_t> pivot_order;
    std::vector<Rational> witness;

    bool psd() const noexcept { return status != PsdStatus::indefinite; }
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Exact positive (semi)definiteness by symmetric elimination with diagonal
/// pivoting over the rationals. Decides the singular boundary exactly.
PsdVerdict psd_status(const SymMatrix& m);

/// Re-verifies a verdict through routes independent of the elimination:
/// leading principal minors for PD, det = 0 plus nonnegative principal
/// minors for the singular case, the quadratic form for indefinite.
bool verify_verdict(const SymMatrix& m, const PsdVerdict& verdict);

/// Exhaustive check that every principal minor is >= 0 (exponential; small m).
bool principal_minors_nonneg(const SymMatrix& m);

struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;
};

struct TotalPositivity {
    bool ok = true;
    std::optional<Minor> first_failure;
};

/// True iff every minor of H_m(y) with size <= minor_order is >= 0.
/// Enumerates all minors, so orders above `order_cap` are refused.
TotalPositivity total_positive_up_to(const Sequence& y, std::size_t m, std::size_t minor_order,
                                     std::size_t order_cap = 6);

/// (E^j y)_n = y_{n+j}. Needs more than j values.
Sequence shift(const Sequence& y, std::size_t j);

/// ((a+b) E y - E^2 y - ab y)_n, given the exact sum a+b and product ab.
Sequence localizing_sequence(const Sequence& y, const Rational& sum, const Rational& product);

struct HausdorffVerdict {
    PsdVerdict hankel;      ///< H_m(y)
    PsdVerdict localizing;  ///< (a+b) H_m(Ey) - H_m(E^2 y) - ab H_m(y)
    bool pass() const noexcept { return hankel.psd() && localizing.psd(); }
};

/// Hausdorff test on [a,b] at order m. Needs 2m+3 values and a < b.
HausdorffVerdict hausdorff_test(const Sequence& y, const Rational& a, const Rational& b, std::size_t m);
/// Same for exact endpoints; a+b and ab must be rational (true for s -/+ 2 sqrt(t)).
HausdorffVerdict hausdorff_test(const Sequence& y, const Interval& ab, std::size_t m);

struct FailureWitness {
    std::string test;    ///< "hamburger", "stieltjes", "hausdorff"
    std::string matrix;  ///< "H", "H~", "localizing"
    std::size_t order = 0;
    PsdVerdict verdict;
};

/**
 * Finite-order classification. The *_ok_up_to fields hold the largest order
 * k such that the test passes for every order <= k, or -1 when order 0
 * already fails. For an interval inside [0, inf) the Hausdorff order also
 * requires the Stieltjes conditions, which are necessary there.
 */
struct MomentClassReport {
    std::size_t max_order = 0;
    int hamburger_ok_up_to = -1;
    int stieltjes_ok_up_to = -1;
    std::optional<Interval> hausdorff_interval;
    std::optional<int> hausdorff_ok_up_to;
    std::vector<Rational> delta_values;
    std::vector<FailureWitness> failure_witnesses;

    bool hamburger() const noexcept { return hamburger_ok_up_to == static_cast<int>(max_order); }
    bool stieltjes() const noexcept { return stieltjes_ok_up_to == static_cast<int>(max_order); }
    bool hausdorff() const noexcept {
        return hausdorff_ok_up_to && *hausdorff_ok_up_to == static_cast<int>(max_order);
    }
    /// Every check requested passed up to max_order.
    bool all_pass() const noexcept {
        return hamburger() && stieltjes() && (!hausdorff_interval || hausdorff());
    }
};

/// Needs 2m+2 values, or 2m+3 with an interval.
MomentClassReport classify(const Sequence& y, std::size_t m,
                           const std::optional<Interval>& interval = std::nullopt);

}  // namespace momentlab

#endif
