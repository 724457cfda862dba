#ifndef MOMENTLAB_IO_HPP
#define MOMENTLAB_IO_HPP

/**
 * @file io.hpp
 * @brief JSON and CSV serialization of sequences and reports.
 *
 * Every JSON document carries "schema": "momentlab/<kind>/v1". Rationals are
 * written as exact strings ("num/den" or integers) so values survive a pipe.
 */

#include "momentlab/chainseq.hpp"
#include "momentlab/hankel.hpp"
#include "momentlab/measures.hpp"
#include "momentlab/orthopoly.hpp"
#include "momentlab/seqcore.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace momentlab {

using Json = nlohmann::ordered_json;

std::string schema_tag(std::string_view kind);

Json rational_json(const Rational& r);
Json interval_json(const Interval& iv);
/// {"exact", "symbolic", "p", "s", "q", "t", "approx"} for x = s -/+ 2 sqrt(t).
Json endpoint_json(const QuadraticSurd& x, const Shorthand& params, Side side);

Json to_json(const Sequence& y);
Json to_json(const SigmaTauSpec& spec);
Json to_json(const PsdVerdict& v);
Json to_json(const MomentClassReport& r);
Json to_json(const ChainVerdict& v);
Json to_json(const ExactChainVerdict& v);
Json to_json(const SupportCertificate& c);
Json to_json(const SupportReport& r);
Json to_json(const RepresentationReport& r);
Json to_json(const PatternVerdict& v);
Json polynomials_json(const std::vector<MonicPolynomial>& ops);
Json zeros_json(const std::vector<double>& zeros, std::size_t degree);

/**
 * Accepts a bare JSON array or an object with a "values" array (and an
 * optional "label"). Entries are integers or exact rational strings.
 * Throws InvalidArgument on malformed input.
 */
Sequence parse_sequence_json(std::string_view text);

/// Header "n,value", one exact value per line.
std::string sequence_csv(const Sequence& y);
std::string representation_csv(const RepresentationReport& r);
/// "x,w" on `points` evenly spaced interior points of the density's interval.
std::string density_csv(const Density& dens, std::size_t points);

}  // namespace momentlab

#endif
