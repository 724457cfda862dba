#include "momentlab/seqcore.hpp"

#include "momentlab/errors.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace momentlab {

SigmaTauSpec::SigmaTauSpec(std::vector<Rational> sigma_prefix, Rational sigma_tail,
                           std::vector<Rational> tau_prefix, Rational tau_tail)
    : sigma_prefix_(std::move(sigma_prefix)),
      sigma_tail_(std::move(sigma_tail)),
      tau_prefix_(std::move(tau_prefix)),
      tau_tail_(std::move(tau_tail)) {
    positive_case_ = tau_tail_ > 0;
    if (tau_tail_ == 0) throw ZeroTau("tau tail is zero");
    for (std::size_t i = 0; i < tau_prefix_.size(); ++i) {
        if (tau_prefix_[i] == 0) throw ZeroTau("t_" + std::to_string(i + 1) + " is zero");
        if (tau_prefix_[i] < 0) positive_case_ = false;
    }
}

const Rational& SigmaTauSpec::s(std::size_t k) const {
    return k < sigma_prefix_.size() ? sigma_prefix_[k] : sigma_tail_;
}

const Rational& SigmaTauSpec::t(std::size_t k) const {
    if (k == 0) throw InvalidArgument("tau is indexed from 1");
    return k - 1 < tau_prefix_.size() ? tau_prefix_[k - 1] : tau_tail_;
}

std::optional<Shorthand> SigmaTauSpec::shorthand() const {
    if (sigma_prefix_.size() > 1 || tau_prefix_.size() > 1) return std::nullopt;
    return Shorthand{s(0), sigma_tail_, t(1), tau_tail_};
}

bool operator==(const SigmaTauSpec& a, const SigmaTauSpec& b) {
    // Compare as infinite sequences, so (2;1) equals (2,2;1,1).
    std::size_t ns = std::max(a.sigma_prefix_.size(), b.sigma_prefix_.size());
    std::size_t nt = std::max(a.tau_prefix_.size(), b.tau_prefix_.size());
    if (a.sigma_tail_ != b.sigma_tail_ || a.tau_tail_ != b.tau_tail_) return false;
    for (std::size_t k = 0; k < ns; ++k) {
        if (a.s(k) != b.s(k)) return false;
    }
    for (std::size_t k = 1; k <= nt; ++k) {
        if (a.t(k) != b.t(k)) return false;
    }
    return true;
}

SigmaTauSpec make_spec(const Rational& p, const Rational& s, const Rational& q, const Rational& t) {
    if (q == 0) throw ZeroTau("q must be nonzero");
    if (t == 0) throw ZeroTau("t must be nonzero");
    return SigmaTauSpec({p}, s, {q}, t);
}

RecursiveMatrix::RecursiveMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InvalidArgument("recursive matrix needs at least one row");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) throw InvalidArgument("recursive matrix rows must be triangular");
    }
}

Rational RecursiveMatrix::operator()(std::size_t n, std::size_t k) const {
    if (k > n) return 0;
    return rows_.at(n)[k];
}

RecursiveMatrix recursive_matrix(const SigmaTauSpec& spec, std::size_t n_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& prev = rows[n];
        std::vector<Rational> next(n + 2, Rational(0));
        for (std::size_t k = 0; k <= n + 1; ++k) {
            Rational v(0);
            if (k >= 1) v += prev[k - 1];
            if (k <= n) v += spec.s(k) * prev[k];
            if (k + 1 <= n) v += spec.t(k + 1) * prev[k + 1];
            next[k] = std::move(v);
        }
        rows.push_back(std::move(next));
    }
    return RecursiveMatrix(std::move(rows));
}

std::string_view to_string(Origin origin) {
    switch (origin) {
        case Origin::catalog: return "catalog";
        case Origin::recursive_matrix: return "recursive-matrix";
        case Origin::transform: return "transform";
        case Origin::external: return "external";
    }
    return "external";
}

Sequence::Sequence(std::vector<Rational> values, std::string label, Origin origin)
    : values_(std::move(values)), label_(std::move(label)), origin_(origin) {
    if (values_.empty()) throw InvalidArgument("sequence must be non-empty");
}

void Sequence::require(std::size_t count) const {
    if (values_.size() < count) throw InsufficientData(count, values_.size());
}

Sequence catalan_like(const SigmaTauSpec& spec, std::size_t n_max, std::string label) {
    // Only the band r_{n,k} with k <= n_max - n feeds column 0, but the full
    // triangle is cheap at the orders used here.
    RecursiveMatrix r = recursive_matrix(spec, n_max);
    std::vector<Rational> values;
    values.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) values.push_back(r(n, 0));
    return Sequence(std::move(values), std::move(label), Origin::recursive_matrix);
}

namespace {

struct CatalogRow {
    const char* name;
    long p, s, q, t;
};

// sigma = (p, s, s, ...), tau = (q, t, t, ...)
constexpr std::array<CatalogRow, 11> kCatalog{{
    {"catalan", 1, 2, 1, 1},
    {"shifted_catalan", 2, 2, 1, 1},
    {"motzkin", 1, 1, 1, 1},
    {"central_binomial", 2, 2, 2, 1},
    {"central_trinomial", 1, 1, 2, 1},
    {"delannoy", 3, 3, 4, 2},
    {"schroder_large", 2, 3, 2, 2},
    {"schroder_little", 1, 3, 2, 2},
    {"fine", 0, 2, 1, 1},
    {"riordan", 0, 1, 1, 1},
    {"hexagonal", 3, 3, 1, 1},
}};

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& row : kCatalog) out.emplace_back(row.name);
        return out;
    }();
    return names;
}

SigmaTauSpec catalog_spec(std::string_view name) {
    for (const auto& row : kCatalog) {
        if (name == row.name) return make_spec(row.p, row.s, row.q, row.t);
    }
    throw UnknownName(std::string(name));
}

CatalogEntry catalog_sequence(std::string_view name, std::size_t n_max) {
    SigmaTauSpec spec = catalog_spec(name);
    Sequence generated = catalan_like(spec, n_max);
    Sequence seq(generated.values(), std::string(name), Origin::catalog);
    return CatalogEntry{std::move(spec), std::move(seq)};
}

}  // namespace momentlab
