#include "octachar/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "octachar/rational.hpp"

namespace octachar {

CharValue centralizer_order(const ConjClass& rho) {
    if (rho.degree() > 33) throw std::overflow_error("centralizer order exceeds 128 bits");
    const auto mult = rho.cycle_type().multiplicities();
    CharValue order = 1;
    for (std::size_t k = 1; k < mult.size(); ++k)
        for (int i = 1; i <= mult[k]; ++i) order *= static_cast<CharValue>(k) * i;
    return order;
}

ConjClass double_class(const ConjClass& rho) {
    std::vector<int> parts(rho.cycle_type().vec());
    for (int& x : parts) x *= 2;
    return ConjClass(Partition(std::move(parts)));
}

Sign class_sign(const ConjClass& rho) {
    long long even_cycles = 0;
    for (int x : rho.cycle_type().parts()) even_cycles += (x % 2 == 0);
    return sign_of_parity(even_cycles);
}

namespace {

std::string memo_key(const std::vector<int>& beta, std::span<const int> cycles) {
    std::string key;
    key.reserve(beta.size() + cycles.size() + 1);
    for (int b : beta) key.push_back(static_cast<char>(b));
    key.push_back(static_cast<char>(0xff));
    for (int c : cycles) key.push_back(static_cast<char>(c));
    return key;
}

// The beta-set is kept at length ℓ(λ) with its trailing zeros stripped, so
// that equal shapes produce equal keys.
std::vector<int> normalized_beta(std::vector<int> beta) {
    // beta is strictly decreasing; trailing 0,1,2,... correspond to zero parts.
    std::size_t zero_parts = 0;
    while (zero_parts < beta.size() &&
           beta[beta.size() - 1 - zero_parts] == static_cast<int>(zero_parts))
        ++zero_parts;
    beta.resize(beta.size() - zero_parts);
    for (int& b : beta) b -= static_cast<int>(zero_parts);
    return beta;
}

}  // namespace

CharValue MnEvaluator::operator()(const Partition& lambda, const ConjClass& rho) {
    if (lambda.size() != rho.degree())
        throw std::invalid_argument("character size mismatch: |lambda| != |rho|");
    if (lambda.size() > 120) throw std::invalid_argument("degree too large for the character memo");
    const BetaSet beta = beta_set(lambda, lambda.length());
    return evaluate(std::vector<int>(beta.entries().begin(), beta.entries().end()),
                    rho.cycle_type().parts());
}

CharValue MnEvaluator::evaluate(const std::vector<int>& beta, std::span<const int> cycles) {
    if (cycles.empty()) return 1;
    const std::string key = memo_key(beta, cycles);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    // Remove a rim hook of length k = cycles[0]: move a bead from b to b−k.
    const int k = cycles.front();
    const auto rest = cycles.subspan(1);
    CharValue total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target, std::greater<>())) continue;
        // Leg length = beads strictly between target and beta[i].
        std::size_t j = i + 1;
        while (j < beta.size() && beta[j] > target) ++j;
        const std::size_t leg = j - i - 1;
        std::vector<int> next;
        next.reserve(beta.size());
        for (std::size_t t = 0; t < beta.size(); ++t) {
            if (t == j) next.push_back(target);
            if (t != i) next.push_back(beta[t]);
        }
        if (j == beta.size()) next.push_back(target);
        const CharValue sub = evaluate(normalized_beta(std::move(next)), rest);
        total += (leg % 2 == 0) ? sub : -sub;
    }

    std::unique_lock lock(mutex_);
    memo_.emplace(key, total);
    return total;
}

std::size_t MnEvaluator::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void MnEvaluator::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

MnEvaluator& shared_mn_evaluator() {
    static MnEvaluator evaluator;
    return evaluator;
}

CharValue mn_character(const Partition& lambda, const ConjClass& rho) {
    return shared_mn_evaluator()(lambda, rho);
}

CharValue dimension(const Partition& lambda) {
    return mn_character(lambda, ConjClass(Partition(std::vector<int>(
                                    static_cast<std::size_t>(lambda.size()), 1))));
}

namespace {

// Enumerates sub-multisets of the cycle type with total size `target`, by
// choosing how many cycles of each length go to the first factor.
void split_cycles(const std::vector<int>& mult, std::size_t length, int target,
                  std::vector<int>& chosen,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (length == 0) {
        if (target == 0) fn(chosen);
        return;
    }
    const int k = static_cast<int>(length);
    for (int j = 0; j <= mult[length] && j * k <= target; ++j) {
        chosen[length] = j;
        split_cycles(mult, length - 1, target - j * k, chosen, fn);
    }
    chosen[length] = 0;
}

ConjClass class_from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (std::size_t k = mult.size(); k-- > 1;)
        parts.insert(parts.end(), static_cast<std::size_t>(mult[k]), static_cast<int>(k));
    return ConjClass(Partition(std::move(parts)));
}

}  // namespace

CharValue product_character(const Partition& pi0, const Partition& pi1, const ConjClass& rho) {
    if (pi0.size() + pi1.size() != rho.degree())
        throw std::invalid_argument("character size mismatch: |pi0| + |pi1| != |rho|");
    const auto mult = rho.cycle_type().multiplicities();
    std::vector<int> chosen(mult.size(), 0);
    Rat sum = 0;
    split_cycles(mult, mult.size() - 1, pi0.size(), chosen, [&](const std::vector<int>& first) {
        std::vector<int> second(mult.size());
        for (std::size_t k = 0; k < mult.size(); ++k) second[k] = mult[k] - first[k];
        const ConjClass rho0 = class_from_multiplicities(first);
        const ConjClass rho1 = class_from_multiplicities(second);
        const CharValue chi = mn_character(pi0, rho0) * mn_character(pi1, rho1);
        if (chi == 0) return;
        Rat term(to_bigint(chi), to_bigint(centralizer_order(rho0) * centralizer_order(rho1)));
        term.canonicalize();
        sum += term;
    });
    sum *= Rat(to_bigint(centralizer_order(rho)));
    if (sum.get_den() != 1)
        throw std::logic_error("induced character value is not an integer");
    return to_int128(sum.get_num());
}

std::vector<ConjClass> admissible_classes(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<ConjClass> out;
    for (const Partition& rho : partitions_of(m / 2)) {
        std::vector<int> parts(rho.vec());
        for (int& x : parts) x *= 2;
        if (m % 2 == 1) parts.push_back(1);
        out.emplace_back(Partition(std::move(parts)));
    }
    return out;
}

ConjClass w0_class(int m) {
    if (m < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<int> parts(static_cast<std::size_t>(m / 2), 2);
    if (m % 2 == 1) parts.push_back(1);
    return ConjClass(Partition(std::move(parts)));
}

}  // namespace octachar
