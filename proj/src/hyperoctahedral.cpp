#include "octachar/hyperoctahedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "octachar/notation.hpp"

namespace octachar {

Target parse_target(std::string_view text) {
    if (text == "even") return Target::even;
    if (text == "odd") return Target::odd;
    throw std::invalid_argument("target must be 'even' or 'odd'");
}

std::string_view to_string(Target t) {
    return t == Target::even ? "even" : "odd";
}

std::string format_bipartition(const BiPartition& b) {
    return "(" + format_partition(b.p0) + "|" + format_partition(b.p1) + ")";
}

BiPartition parse_bipartition(std::string_view text) {
    std::size_t begin = 0;
    while (begin < text.size() && text[begin] == ' ') ++begin;
    std::size_t end = text.size();
    while (end > begin && text[end - 1] == ' ') --end;
    if (begin >= end || text[begin] != '(') throw ParseError("expected '('", begin);
    if (text[end - 1] != ')') throw ParseError("expected ')'", end == 0 ? 0 : end - 1);
    const auto bar = text.find('|', begin);
    if (bar == std::string_view::npos || bar > end) throw ParseError("expected '|'", begin + 1);
    const auto wrap = [](std::string_view part, std::size_t offset) {
        try {
            return parse_partition(part);
        } catch (const ParseError& e) {
            throw ParseError("malformed bipartition component", offset + e.position());
        }
    };
    BiPartition b;
    b.p0 = wrap(text.substr(begin + 1, bar - begin - 1), begin + 1);
    b.p1 = wrap(text.substr(bar + 1, end - 1 - bar - 1), bar + 1);
    return b;
}

std::vector<BiPartition> bipartitions_of(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<BiPartition> out;
    for (int a = 0; a <= n; ++a)
        for (const Partition& p0 : partitions_of(a))
            for (const Partition& p1 : partitions_of(n - a)) out.push_back({p0, p1});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BnClass> bn_classes_of(int n) {
    std::vector<BnClass> out;
    for (auto& b : bipartitions_of(n)) out.push_back({std::move(b.p0), std::move(b.p1)});
    return out;
}

ConjClass embed_class(const BnClass& c) {
    std::vector<int> parts;
    for (int x : c.positive_cycles.parts()) {
        parts.push_back(x);
        parts.push_back(x);
    }
    for (int x : c.negative_cycles.parts()) parts.push_back(2 * x);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return ConjClass(Partition(std::move(parts)));
}

BnClass norm(const ConjClass& w, Target target) {
    const int degree = w.degree();
    if ((degree % 2 == 1) != (target == Target::odd))
        throw std::domain_error("norm undefined on this class");
    std::vector<int> parts(w.cycle_type().vec());
    if (target == Target::odd) {
        const auto ones = std::count(parts.begin(), parts.end(), 1);
        if (ones != 1) throw std::domain_error("norm undefined on this class");
        parts.pop_back();
    }
    for (int& x : parts) {
        if (x % 2 != 0) throw std::domain_error("norm undefined on this class");
        x /= 2;
    }
    return BnClass{Partition(std::move(parts)), Partition{}};
}

Partition basechange(const BiPartition& pi, Target target) {
    const Partition quotient[] = {pi.p0, pi.p1};
    if (target == Target::even) return from_core_and_quotient(Partition{}, quotient, 2, 0);
    return from_core_and_quotient(Partition{1}, quotient, 2, 1);
}

BiPartition basechange_preimage(const Partition& lambda) {
    if (!has_basechange_core(lambda))
        throw std::domain_error("partition is not in the image of basechange");
    auto [p0, p1] = two_quotient(lambda);
    return {std::move(p0), std::move(p1)};
}

namespace {

CharValue binomial(int n, int k) {
    CharValue r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

CharValue factorial(int n) {
    CharValue r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// h(i) = sign[i] · (perm[i] + 1) on {±1, …, ±n}, zero-based internally.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;
};

// (a ∘ b)(i) = a(b(i)).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    const std::size_t n = a.perm.size();
    SignedPerm out{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(b.perm[i]);
        out.perm[i] = a.perm[j];
        out.sign[i] = b.sign[i] * a.sign[j];
    }
    return out;
}

SignedPerm inverse(const SignedPerm& h) {
    const std::size_t n = h.perm.size();
    SignedPerm out{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(h.perm[i]);
        out.perm[j] = static_cast<int>(i);
        out.sign[j] = h.sign[i];
    }
    return out;
}

SignedPerm class_representative(const BnClass& c) {
    const auto n = static_cast<std::size_t>(c.n());
    SignedPerm h{std::vector<int>(n), std::vector<int>(n, 1)};
    std::size_t start = 0;
    const auto place = [&](int length, bool negative) {
        const auto len = static_cast<std::size_t>(length);
        for (std::size_t i = 0; i < len; ++i)
            h.perm[start + i] = static_cast<int>(start + (i + 1) % len);
        if (negative) h.sign[start] = -1;
        start += len;
    };
    for (int x : c.positive_cycles.parts()) place(x, false);
    for (int x : c.negative_cycles.parts()) place(x, true);
    return h;
}

// Cycle type of the permutation restricted to [lo, hi); assumes the block is invariant.
ConjClass block_cycle_type(const std::vector<int>& perm, int lo, int hi) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (int i = lo; i < hi; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return ConjClass(Partition(std::move(lengths)));
}

}  // namespace

CharValue bn_dimension(const BiPartition& pi) {
    return binomial(pi.n(), pi.p0.size()) * dimension(pi.p0) * dimension(pi.p1);
}

CharValue bn_character_positive(const BiPartition& pi, const BnClass& c) {
    if (!c.negative_cycles.empty()) throw std::domain_error("use bn_character_full");
    if (pi.n() != c.n()) throw std::invalid_argument("character size mismatch: |pi| != |class|");
    return product_character(pi.p0, pi.p1, ConjClass(c.positive_cycles));
}

CharValue bn_character_bruteforce(const BiPartition& pi, const BnClass& c) {
    const int n = pi.n();
    if (n > 6) throw std::domain_error("oracle scale exceeded");
    if (c.n() != n) throw std::invalid_argument("character size mismatch: |pi| != |class|");
    const int a = pi.p0.size();
    const SignedPerm s = class_representative(c);

    std::map<std::pair<ConjClass, ConjClass>, CharValue> block_chars;
    const auto inducing_character = [&](const SignedPerm& u) -> CharValue {
        for (int i = 0; i < a; ++i)
            if (u.perm[static_cast<std::size_t>(i)] >= a) return 0;
        int sign = 1;
        for (int i = a; i < n; ++i) sign *= u.sign[static_cast<std::size_t>(i)];
        auto key = std::make_pair(block_cycle_type(u.perm, 0, a), block_cycle_type(u.perm, a, n));
        auto it = block_chars.find(key);
        if (it == block_chars.end()) {
            const CharValue v = mn_character(pi.p0, key.first) * mn_character(pi.p1, key.second);
            it = block_chars.emplace(std::move(key), v).first;
        }
        return sign * it->second;
    };

    CharValue total = 0;
    SignedPerm t{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
    std::iota(t.perm.begin(), t.perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) t.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
            total += inducing_character(compose(inverse(t), compose(s, t)));
        }
    } while (std::next_permutation(t.perm.begin(), t.perm.end()));

    const CharValue subgroup_order = (CharValue(1) << n) * factorial(a) * factorial(n - a);
    if (total % subgroup_order != 0) throw std::logic_error("induced character value is not an integer");
    return total / subgroup_order;
}

CharValue bn_character_full(const BiPartition& pi, const BnClass& c) {
    if (c.negative_cycles.empty()) return bn_character_positive(pi, c);
    return bn_character_bruteforce(pi, c);
}

}  // namespace octachar
