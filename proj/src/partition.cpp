#include "octachar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace octachar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int row : parts_)
            for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
    for (int x : parts_) ++mult[static_cast<std::size_t>(x)];
    return mult;
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0)
            throw std::invalid_argument("beta-numbers must be non-negative");
        if (i > 0 && entries_[i] >= entries_[i - 1])
            throw std::invalid_argument("beta-numbers must be strictly decreasing");
    }
}

std::size_t BetaSet::count_even() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](int b) { return b % 2 == 0; }));
}

BetaSet beta_set(const Partition& lambda, std::size_t length) {
    if (length < lambda.length())
        throw std::invalid_argument("insufficient beta length");
    std::vector<int> beta(length);
    for (std::size_t i = 0; i < length; ++i)
        beta[i] = lambda[i] + static_cast<int>(length - 1 - i);
    return BetaSet(std::move(beta));
}

Partition partition_from_beta(const BetaSet& beta) {
    const auto entries = beta.entries();
    const std::size_t r = entries.size();
    std::vector<int> parts(r);
    for (std::size_t i = 0; i < r; ++i)
        parts[i] = entries[i] - static_cast<int>(r - 1 - i);
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> hooks(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        hooks[i].resize(static_cast<std::size_t>(lambda[i]));
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks[i][static_cast<std::size_t>(j)] = arm + leg + 1;
        }
    }
    return hooks;
}

namespace {

void require_modulus(int p) {
    if (p < 2) throw std::invalid_argument("modulus p must be at least 2");
}

int floor_mod(int a, int p) {
    const int r = a % p;
    return r < 0 ? r + p : r;
}

std::size_t padded_length(std::size_t min_length, int p, int residue) {
    std::size_t r = min_length;
    while (floor_mod(static_cast<int>(r), p) != floor_mod(residue, p)) ++r;
    return r;
}

}  // namespace

bool is_p_core(const Partition& lambda, int p) {
    require_modulus(p);
    for (const auto& row : hook_lengths(lambda))
        for (int h : row)
            if (h % p == 0) return false;
    return true;
}

Partition p_core(const Partition& lambda, int p) {
    require_modulus(p);
    const BetaSet beta = beta_set(lambda, lambda.length());
    std::vector<int> beads(static_cast<std::size_t>(p), 0);
    for (int b : beta.entries()) ++beads[static_cast<std::size_t>(b % p)];
    std::vector<int> compact;
    for (int runner = 0; runner < p; ++runner)
        for (int level = 0; level < beads[static_cast<std::size_t>(runner)]; ++level)
            compact.push_back(runner + p * level);
    std::sort(compact.begin(), compact.end(), std::greater<>());
    return partition_from_beta(BetaSet(std::move(compact)));
}

std::vector<Partition> p_quotient(const Partition& lambda, int p, int residue) {
    require_modulus(p);
    const BetaSet beta = beta_set(lambda, padded_length(lambda.length(), p, residue));
    std::vector<std::vector<int>> runners(static_cast<std::size_t>(p));
    for (int b : beta.entries()) {
        const int i = b % p;
        runners[static_cast<std::size_t>(i)].push_back((b - i) / p);
    }
    std::vector<Partition> quotient;
    quotient.reserve(runners.size());
    for (auto& runner : runners) quotient.push_back(partition_from_beta(BetaSet(std::move(runner))));
    return quotient;
}

CoreQuotient core_quotient(const Partition& lambda, int p, int residue) {
    return CoreQuotient{p, p_core(lambda, p), p_quotient(lambda, p, residue)};
}

Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient,
                                 int p, int residue) {
    require_modulus(p);
    if (quotient.size() != static_cast<std::size_t>(p))
        throw std::invalid_argument("quotient must have exactly p components");
    if (!is_p_core(core, p)) throw std::invalid_argument("not a p-core");

    // Grow the core's beta-set p entries at a time until every runner has
    // room for its quotient component.
    std::size_t length = padded_length(core.length(), p, residue);
    for (;;) {
        const BetaSet beta = beta_set(core, length);
        std::vector<std::size_t> beads(static_cast<std::size_t>(p), 0);
        for (int b : beta.entries()) ++beads[static_cast<std::size_t>(b % p)];
        bool fits = true;
        for (std::size_t i = 0; i < beads.size(); ++i)
            fits = fits && quotient[i].length() <= beads[i];
        if (!fits) {
            length += static_cast<std::size_t>(p);
            continue;
        }
        std::vector<int> entries;
        entries.reserve(length);
        for (std::size_t i = 0; i < beads.size(); ++i) {
            const BetaSet runner = beta_set(quotient[i], beads[i]);
            for (int level : runner.entries()) entries.push_back(static_cast<int>(i) + p * level);
        }
        std::sort(entries.begin(), entries.end(), std::greater<>());
        return partition_from_beta(BetaSet(std::move(entries)));
    }
}

std::pair<Partition, Partition> two_quotient(const Partition& lambda) {
    auto q = p_quotient(lambda, 2, lambda.size() % 2);
    return {std::move(q[0]), std::move(q[1])};
}

bool has_basechange_core(const Partition& lambda) {
    const Partition core = p_core(lambda, 2);
    return lambda.size() % 2 == 0 ? core.empty() : core == Partition{1};
}

Sign sign_shuffle(const Partition& lambda) {
    const std::size_t len = lambda.length();
    const std::size_t parity = static_cast<std::size_t>(lambda.size() % 2);
    return sign_shuffle(lambda, len % 2 == parity ? len : len + 1);
}

Sign sign_shuffle(const Partition& lambda, std::size_t length) {
    if (!has_basechange_core(lambda)) throw std::domain_error("sign undefined");
    const bool odd = lambda.size() % 2 == 1;
    if (length % 2 != (odd ? 1u : 0u))
        throw std::invalid_argument("beta length parity must match the partition size parity");

    const BetaSet beta = beta_set(lambda, length);
    // Target set: {length−1, …, 0} for even size, {length, …, 1} for odd size.
    const int top = odd ? static_cast<int>(length) : static_cast<int>(length) - 1;
    std::vector<int> target_odd, target_even;
    for (int x = top; x >= top - static_cast<int>(length) + 1; --x)
        (x % 2 ? target_odd : target_even).push_back(x);
    if (beta.count_odd() != target_odd.size()) throw std::domain_error("sign undefined");

    // Image of each beta-number (in decreasing order) under the
    // parity-preserving, order-preserving map onto the target set.
    std::vector<int> image;
    image.reserve(length);
    std::size_t next_odd = 0, next_even = 0;
    for (int b : beta.entries())
        image.push_back(b % 2 ? target_odd[next_odd++] : target_even[next_even++]);

    long long inversions = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (image[i] < image[j]) ++inversions;

    Sign s = sign_of_parity(inversions);
    if (odd) s = s * sign_of_parity(static_cast<long long>((length - 1) / 2));
    return s;
}

Sign sign_odd_parts(const Partition& lambda) {
    const auto odd_parts = std::count_if(lambda.parts().begin(), lambda.parts().end(),
                                         [](int x) { return x % 2 == 1; });
    return sign_of_parity(odd_parts / 2);
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(prefix));
        return;
    }
    for (int first = 1; first <= std::min(remaining, max_part); ++first) {
        prefix.push_back(first);
        generate(remaining - first, first, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("partition size must be non-negative");
    std::vector<int> prefix;
    generate(n, n, prefix, fn);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace octachar
