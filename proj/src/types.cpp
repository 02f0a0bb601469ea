#include "rdpc/types.hpp"

#include <algorithm>
#include <sstream>

namespace rdpc {

std::string to_string(const TokenSequence& x) {
    bool compact = std::all_of(x.tokens.begin(), x.tokens.end(),
                               [](Token t) { return t >= 0 && t <= 9; });
    std::string out;
    if (compact) {
        out.reserve(x.tokens.size());
        for (Token t : x.tokens) out.push_back(static_cast<char>('0' + t));
        return out;
    }
    std::ostringstream ss;
    for (size_t i = 0; i < x.tokens.size(); ++i) {
        if (i) ss << ' ';
        ss << x.tokens[i];
    }
    return ss.str();
}

TokenSequence parse_sequence(const std::string& s) {
    TokenSequence x;
    if (s.find(' ') == std::string::npos) {
        for (char c : s) {
            if (c < '0' || c > '9')
                throw std::runtime_error("bad token character in sequence: " + s);
            x.tokens.push_back(c - '0');
        }
    } else {
        std::istringstream ss(s);
        Token t;
        while (ss >> t) {
            if (t < 0) throw std::runtime_error("negative token id in sequence: " + s);
            x.tokens.push_back(t);
        }
        if (!ss.eof()) throw std::runtime_error("bad token id in sequence: " + s);
    }
    if (x.empty()) throw std::runtime_error("empty token sequence");
    return x;
}

bool in_alphabet(const TokenSequence& x, int alphabet_size) {
    return std::all_of(x.tokens.begin(), x.tokens.end(),
                       [&](Token t) { return t >= 0 && t < alphabet_size; });
}

bool is_subsequence(const TokenSequence& m, const TokenSequence& x) {
    size_t i = 0;
    for (Token t : x.tokens) {
        if (i < m.tokens.size() && m.tokens[i] == t) ++i;
    }
    return i == m.tokens.size();
}

bool AnswerDistribution::is_valid() const {
    double sum = 0.0;
    for (const auto& [y, p] : pmf) {
        if (!(p >= 0.0)) return false;
        sum += p;
    }
    return std::abs(sum - 1.0) <= 1e-12;
}

std::string metric_name(DistortionMetric m) {
    return m == DistortionMetric::LogLoss ? "log" : "zero-one";
}

DistortionMetric parse_metric(const std::string& s) {
    if (s == "log") return DistortionMetric::LogLoss;
    if (s == "zero-one" || s == "0/1") return DistortionMetric::ZeroOneLoss;
    throw std::runtime_error("unknown distortion metric: " + s);
}

std::string argmax_answer(const AnswerDistribution& p) {
    if (p.pmf.empty()) throw std::invalid_argument("argmax of empty distribution");
    auto best = p.pmf.begin();
    for (auto it = std::next(best); it != p.pmf.end(); ++it) {
        if (it->second > best->second) best = it;  // strict: first key wins ties
    }
    return best->first;
}

double distortion(DistortionMetric metric, const std::string& y,
                  const AnswerDistribution& p) {
    if (metric == DistortionMetric::LogLoss) {
        double py = p.prob(y);
        if (py <= 0.0) return kInf;
        return -std::log(py);
    }
    return y == argmax_answer(p) ? 0.0 : 1.0;
}

}  // namespace rdpc
