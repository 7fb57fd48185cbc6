#include "octachar/notation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace octachar {

std::string format_partition(const Partition& p) {
    std::string out = "[";
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i > 0) out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    out += ']';
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    // Signed so that "-3" is reported as a non-positive part rather than a syntax error.
    long long integer() {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", start);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("integer too large", start);
            ++pos_;
        }
        return negative ? -v : v;
    }
    std::size_t position() {
        skip_space();
        return pos_;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
    Cursor cur(text);
    cur.expect('[');
    std::vector<int> parts;
    if (!cur.accept(']')) {
        for (;;) {
            const std::size_t at = cur.position();
            const long long part = cur.integer();
            if (part <= 0) throw ParseError("parts must be positive", at);
            long long count = 1;
            if (cur.accept('^')) {
                const std::size_t exp_at = cur.position();
                count = cur.integer();
                if (count <= 0) throw ParseError("exponent must be positive", exp_at);
            }
            if (!parts.empty() && part > parts.back())
                throw ParseError("parts must be weakly decreasing", at);
            if (parts.size() + static_cast<std::size_t>(count) > 100'000)
                throw ParseError("partition too long", at);
            parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<int>(part));
            if (cur.accept(']')) break;
            cur.expect(',');
        }
    }
    if (!cur.at_end()) throw ParseError("trailing characters", cur.position());
    return Partition(std::move(parts));
}

std::string format_int128(__int128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

__int128 parse_int128(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    if (i >= text.size()) throw ParseError("expected an integer", i);
    unsigned __int128 u = 0;
    const unsigned __int128 limit = static_cast<unsigned __int128>(std::numeric_limits<__int128>::max());
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", i);
        const auto digit = static_cast<unsigned>(text[i] - '0');
        if (u > (limit + 1 - digit) / 10) throw ParseError("integer out of range", i);
        u = u * 10 + digit;
    }
    if (!negative && u > limit) throw ParseError("integer out of range", text.size());
    return negative ? static_cast<__int128>(-u) : static_cast<__int128>(u);
}

}  // namespace octachar
