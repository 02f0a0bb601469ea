#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdpc {

using Token = int;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// A nonempty finite sequence of token ids over a small alphabet.
/// Prompts, queries-by-id and compressed prompts are all TokenSequences.
struct TokenSequence {
    std::vector<Token> tokens;

    TokenSequence() = default;
    explicit TokenSequence(std::vector<Token> t) : tokens(std::move(t)) {}

    int len() const { return static_cast<int>(tokens.size()); }
    bool empty() const { return tokens.empty(); }

    bool operator==(const TokenSequence& o) const { return tokens == o.tokens; }
    bool operator<(const TokenSequence& o) const { return tokens < o.tokens; }
};

/// Renders single-digit alphabets as a compact string ("0110"); larger
/// alphabets as whitespace-separated ids.
std::string to_string(const TokenSequence& x);

/// Inverse of to_string. Accepts compact digit strings and
/// whitespace-separated id lists.
TokenSequence parse_sequence(const std::string& s);

/// True if every token id lies in [0, alphabet_size).
bool in_alphabet(const TokenSequence& x, int alphabet_size);

/// True if `m` can be obtained from `x` by deleting tokens (order kept).
bool is_subsequence(const TokenSequence& m, const TokenSequence& x);

/// PMF over answer symbols. The map's lexicographic key order is the
/// canonical order used for deterministic tie-breaking.
struct AnswerDistribution {
    std::map<std::string, double> pmf;

    double prob(const std::string& y) const {
        auto it = pmf.find(y);
        return it == pmf.end() ? 0.0 : it->second;
    }

    /// Nonnegative entries summing to 1 within 1e-12.
    bool is_valid() const;
};

enum class DistortionMetric { LogLoss, ZeroOneLoss };

std::string metric_name(DistortionMetric m);
DistortionMetric parse_metric(const std::string& s);

/// Symbol with maximal probability; ties broken by smallest symbol in
/// canonical (lexicographic) order. Throws on an empty pmf.
std::string argmax_answer(const AnswerDistribution& p);

/// Log loss: -ln p(y), +infinity when p(y) = 0.
/// Zero-one loss: 1 unless y is the tie-broken argmax of p.
double distortion(DistortionMetric metric, const std::string& y,
                  const AnswerDistribution& p);

}  // namespace rdpc
