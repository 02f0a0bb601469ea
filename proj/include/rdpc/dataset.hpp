#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "rdpc/types.hpp"

namespace rdpc {

/// First-order Markov chain over {0,1}: with probability stay_prob the
/// next token repeats the previous one. Prompt lengths are uniform on
/// [min_len, max_len]; the initial token is 1 with probability initial_p1.
struct MarkovChainParams {
    double stay_prob = 0.9;
    double initial_p1 = 0.5;
    int min_len = 4;
    int max_len = 10;

    double transition_prob() const { return 1.0 - stay_prob; }
    void validate() const;
};

enum class QueryId {
    CountOnes,
    CountZeros,
    Parity,
    LongestRun,
    Palindrome,
    Transitions,
    NextBit,
};

std::string query_id_name(QueryId q);
QueryId parse_query_id(const std::string& s);

struct QuerySpec {
    QueryId id;
    std::string text;
    std::vector<std::string> answer_alphabet;
};

/// Canonical spec for one query; answer alphabets are sized to cover
/// every answer reachable from prompts of length <= max_len.
QuerySpec query_spec(QueryId q, int max_len);

/// The seven queries in canonical order.
std::vector<QuerySpec> default_queries(int max_len);

/// Deterministic answer function on binary sequences.
std::string answer(QueryId q, const TokenSequence& x);

struct DatasetRecord {
    TokenSequence prompt;
    QueryId query_id;
    std::string answer;
    double weight = 0.0;
};

/// Draws n_per_query prompts per query i.i.d. from the chain and attaches
/// deterministic answers. Output is reproducible across platforms: the
/// generator is mt19937_64 and all variate mappings are spelled out in
/// rng_bounded/rng_unit below.
std::vector<DatasetRecord> generate_dataset(const MarkovChainParams& params,
                                            const std::vector<QuerySpec>& queries,
                                            int n_per_query, std::uint64_t seed);

/// Merges duplicate (prompt, query, answer) triples by summing weights and
/// rescales so weights sum to 1. Result is sorted canonically.
std::vector<DatasetRecord> normalize_records(std::vector<DatasetRecord> records);

struct SurprisalProfile {
    std::vector<double> surprisals;  // -ln P(x_i | x_{i-1}), -ln P(x_0) at i=0
    double log_prob = 0.0;           // ln P(x) = -sum of surprisals
};

SurprisalProfile sequence_log_prob(const TokenSequence& x,
                                   const MarkovChainParams& params);

/// Line-delimited dataset file: one flat JSON object per record with fields
/// prompt, query_id, query_text, answer, weight.
void write_dataset(const std::filesystem::path& path,
                   const std::vector<DatasetRecord>& records, int max_len);
std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path);

/// Rejection-sampled uniform draw on [0, bound); unbiased and portable.
std::uint64_t rng_bounded(std::mt19937_64& g, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double rng_unit(std::mt19937_64& g);

}  // namespace rdpc
