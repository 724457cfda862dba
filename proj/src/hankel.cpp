#include "momentlab/hankel.hpp"

#include "momentlab/errors.hpp"

#include <functional>
#include <utility>

namespace momentlab {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Rational(0)) {}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InvalidArgument("matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i]) throw InvalidArgument("matrix is not symmetric");
            m.a_[i * m.dim_ + j] = rows[i][j];
        }
    }
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    a_[i * dim_ + j] = value;
    a_[j * dim_ + i] = value;
}

Rational SymMatrix::quadratic_form(std::span<const Rational> v) const {
    if (v.size() != dim_) throw LengthMismatch("vector length does not match matrix order");
    Rational acc(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j) * v[j];
        acc += v[i] * row;
    }
    return acc;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
}

SymMatrix hankel_matrix(const Sequence& y, std::size_t m, std::size_t shift) {
    y.require(2 * m + 1 + shift);
    SymMatrix h(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i; j <= m; ++j) h.set(i, j, y[i + j + shift]);
    }
    return h;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a) {
        if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
    }
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Rational det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Rational determinant(const SymMatrix& m) { return determinant(m.rows()); }

Rational hankel_det(const Sequence& y, std::size_t m) { return determinant(hankel_matrix(y, m)); }

std::string_view to_string(PsdStatus status) {
    switch (status) {
        case PsdStatus::positive_definite: return "positive_definite";
        case PsdStatus::positive_semidefinite_singular: return "positive_semidefinite_singular";
        case PsdStatus::indefinite: return "indefinite";
    }
    return "indefinite";
}

PsdVerdict psd_status(const SymMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Rational>> a = m.rows();
    // basis[i] tracks v_i in original coordinates with a[i][j] = v_i^T M v_j.
    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    std::vector<bool> active(n, true);

    PsdVerdict verdict;
    auto indefinite = [&](std::vector<Rational> v) {
        verdict.status = PsdStatus::indefinite;
        verdict.witness = std::move(v);
        return verdict;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            if (a[i][i] < 0) return indefinite(basis[i]);
            if (pivot == n && a[i][i] > 0) pivot = i;
        }
        if (pivot == n) {
            // Remaining diagonal is zero; any nonzero off-diagonal entry b
            // gives (v_i - sign(b) v_j)^T M (v_i - sign(b) v_j) = -2|b|.
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!active[j] || a[i][j] == 0) continue;
                    std::vector<Rational> v = basis[i];
                    const int s = sgn(a[i][j]);
                    for (std::size_t c = 0; c < n; ++c) v[c] -= s * basis[j][c];
                    return indefinite(std::move(v));
                }
            }
            break;
        }
        const Rational d = a[pivot][pivot];
        verdict.pivots.push_back(d);
        verdict.pivot_order.push_back(pivot);
        active[pivot] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a[i][pivot] == 0) continue;
            Rational f = a[i][pivot] / d;
            for (std::size_t j = 0; j < n; ++j) {
                if (active[j]) a[i][j] -= f * a[pivot][j];
            }
            for (std::size_t c = 0; c < n; ++c) basis[i][c] -= f * basis[pivot][c];
        }
    }
    verdict.status = verdict.pivots.size() == n ? PsdStatus::positive_definite
                                                : PsdStatus::positive_semidefinite_singular;
    return verdict;
}

namespace {

SymMatrix principal_submatrix(const SymMatrix& m, const std::vector<std::size_t>& idx) {
    SymMatrix sub(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i; j < idx.size(); ++j) sub.set(i, j, m(idx[i], idx[j]));
    }
    return sub;
}

}  // namespace

bool principal_minors_nonneg(const SymMatrix& m) {
    const std::size_t n = m.dim();
    if (n >= 24) throw InvalidArgument("principal minor enumeration is limited to order < 24");
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1UL << i)) idx.push_back(i);
        }
        if (determinant(principal_submatrix(m, idx)) < 0) return false;
    }
    return true;
}

bool verify_verdict(const SymMatrix& m, const PsdVerdict& verdict) {
    switch (verdict.status) {
        case PsdStatus::positive_definite: {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < m.dim(); ++k) {
                idx.push_back(k);
                if (determinant(principal_submatrix(m, idx)) <= 0) return false;
            }
            return true;
        }
        case PsdStatus::positive_semidefinite_singular:
            return determinant(m) == 0 && principal_minors_nonneg(m);
        case PsdStatus::indefinite:
            return verdict.witness.size() == m.dim() && m.quadratic_form(verdict.witness) < 0;
    }
    return false;
}

namespace {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        if (!visit(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TotalPositivity total_positive_up_to(const Sequence& y, std::size_t m, std::size_t minor_order,
                                     std::size_t order_cap) {
    if (m > order_cap) {
        throw InvalidArgument("total positivity enumeration capped at order " + std::to_string(order_cap));
    }
    if (minor_order > m + 1) throw InvalidArgument("minor order exceeds matrix size");
    SymMatrix h = hankel_matrix(y, m);
    const std::size_t n = m + 1;
    TotalPositivity result;
    for (std::size_t k = 1; k <= minor_order && result.ok; ++k) {
        for_each_combination(n, k, [&](const std::vector<std::size_t>& rows) {
            for_each_combination(n, k, [&](const std::vector<std::size_t>& cols) {
                std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = h(rows[i], cols[j]);
                }
                Rational det = determinant(std::move(sub));
                if (det < 0) {
                    result.ok = false;
                    result.first_failure = Minor{rows, cols, det};
                    return false;
                }
                return true;
            });
            return result.ok;
        });
    }
    return result;
}

Sequence shift(const Sequence& y, std::size_t j) {
    y.require(j + 1);
    std::vector<Rational> values(y.values().begin() + static_cast<std::ptrdiff_t>(j), y.values().end());
    std::string label = y.label().empty() ? std::string() : "E^" + std::to_string(j) + " " + y.label();
    return Sequence(std::move(values), std::move(label), Origin::transform);
}

Sequence localizing_sequence(const Sequence& y, const Rational& sum, const Rational& product) {
    y.require(3);
    std::vector<Rational> z(y.size() - 2);
    for (std::size_t n = 0; n < z.size(); ++n) z[n] = sum * y[n + 1] - y[n + 2] - product * y[n];
    return Sequence(std::move(z), "localizing", Origin::transform);
}

namespace {

HausdorffVerdict hausdorff_from_coefficients(const Sequence& y, const Rational& sum,
                                             const Rational& product, std::size_t m) {
    y.require(2 * m + 3);
    HausdorffVerdict v;
    v.hankel = psd_status(hankel_matrix(y, m));
    v.localizing = psd_status(hankel_matrix(localizing_sequence(y, sum, product), m));
    return v;
}

std::pair<Rational, Rational> rational_sum_product(const Interval& ab) {
    if (!(ab.lower < ab.upper)) throw InvalidArgument("interval needs lower < upper");
    QuadraticSurd sum = ab.lower + ab.upper;
    QuadraticSurd product = ab.lower * ab.upper;
    if (!sum.is_rational() || !product.is_rational()) {
        throw InvalidArgument("interval endpoints must have rational sum and product");
    }
    return {sum.rational_part(), product.rational_part()};
}

}  // namespace

HausdorffVerdict hausdorff_test(const Sequence& y, const Rational& a, const Rational& b, std::size_t m) {
    if (!(a < b)) throw InvalidArgument("hausdorff_test needs a < b");
    return hausdorff_from_coefficients(y, a + b, a * b, m);
}

HausdorffVerdict hausdorff_test(const Sequence& y, const Interval& ab, std::size_t m) {
    auto [sum, product] = rational_sum_product(ab);
    return hausdorff_from_coefficients(y, sum, product, m);
}

MomentClassReport classify(const Sequence& y, std::size_t m, const std::optional<Interval>& interval) {
    y.require(interval ? 2 * m + 3 : 2 * m + 2);
    std::optional<Sequence> localizing;
    bool nonneg_interval = false;
    if (interval) {
        auto [sum, product] = rational_sum_product(*interval);
        localizing = localizing_sequence(y, sum, product);
        nonneg_interval = interval->lower.sign() >= 0;
    }

    MomentClassReport report;
    report.max_order = m;
    report.hausdorff_interval = interval;
    if (interval) report.hausdorff_ok_up_to = -1;
    bool ham_ok = true;
    bool stj_ok = true;
    bool hdf_ok = interval.has_value();

    for (std::size_t k = 0; k <= m; ++k) {
        SymMatrix h = hankel_matrix(y, k);
        report.delta_values.push_back(determinant(h));
        PsdVerdict vh = psd_status(h);
        PsdVerdict vs = psd_status(hankel_matrix(y, k, 1));

        if (ham_ok) {
            if (vh.psd()) {
                report.hamburger_ok_up_to = static_cast<int>(k);
            } else {
                ham_ok = false;
                report.failure_witnesses.push_back({"hamburger", "H", k, vh});
            }
        }
        if (stj_ok) {
            if (vh.psd() && vs.psd()) {
                report.stieltjes_ok_up_to = static_cast<int>(k);
            } else {
                stj_ok = false;
                if (vh.psd()) {
                    report.failure_witnesses.push_back({"stieltjes", "H~", k, vs});
                } else {
                    report.failure_witnesses.push_back({"stieltjes", "H", k, vh});
                }
            }
        }
        if (hdf_ok) {
            PsdVerdict vl = psd_status(hankel_matrix(*localizing, k));
            if (!vh.psd()) {
                hdf_ok = false;
                report.failure_witnesses.push_back({"hausdorff", "H", k, vh});
            } else if (!vl.psd()) {
                hdf_ok = false;
                report.failure_witnesses.push_back({"hausdorff", "localizing", k, vl});
            } else if (nonneg_interval && !vs.psd()) {
                hdf_ok = false;
                report.failure_witnesses.push_back({"hausdorff", "H~", k, vs});
            } else {
                report.hausdorff_ok_up_to = static_cast<int>(k);
            }
        }
    }
    return report;
}

}  // namespace momentlab
