#include "kronstab/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "kronstab/errors.hpp"

namespace kronstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::at(int i) const {
    if (i < 1)
        throw DomainError("partition index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

std::size_t PartitionHash::operator()(const Partition &p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

int parse_int(std::string_view tok, std::size_t column, std::string_view whole_token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("malformed token '" + std::string(whole_token) + "'", column);
    return v;
}

std::string_view trim(std::string_view s, std::size_t &offset) {
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t'))
        ++b;
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t'))
        --e;
    offset += b;
    return s.substr(b, e - b);
}

} // namespace

Partition parse_partition(std::string_view text) {
    std::size_t offset = 0;
    text = trim(text, offset);
    if (text.empty() || text == "-")
        return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::size_t col = offset + start;
        std::string_view tok = trim(text.substr(start, comma - start), col);
        const std::size_t column = col + 1;
        if (tok.empty())
            throw ParseError("empty token", column);
        std::size_t caret = tok.find('^');
        int value = 0;
        int repeat = 1;
        if (caret == std::string_view::npos) {
            value = parse_int(tok, column, tok);
        } else {
            value = parse_int(tok.substr(0, caret), column, tok);
            repeat = parse_int(tok.substr(caret + 1), column, tok);
            if (repeat <= 0)
                throw ParseError("non-positive exponent in token '" + std::string(tok) + "'", column);
        }
        if (value <= 0)
            throw ParseError("non-positive part in token '" + std::string(tok) + "'", column);
        if (!parts.empty() && value > parts.back())
            throw ParseError("parts increase at token '" + std::string(tok) + "'", column);
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition &p) {
    if (p.empty())
        return "-";
    std::string out;
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const std::size_t run = j - i;
        auto emit = [&](const std::string &s) {
            if (!out.empty())
                out += ',';
            out += s;
        };
        if (run >= 3) {
            emit(std::to_string(parts[i]) + "^" + std::to_string(run));
        } else {
            for (std::size_t k = 0; k < run; ++k)
                emit(std::to_string(parts[i]));
        }
        i = j;
    }
    return out;
}

DoublePartition parse_double_partition(std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("double partition needs a ';' separator: '" + std::string(text) + "'");
    if (text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("more than one ';' in double partition", semi + 2);
    Partition plus;
    try {
        plus = parse_partition(text.substr(0, semi));
    } catch (const ParseError &e) {
        throw e.shifted(0);
    }
    try {
        return {plus, parse_partition(text.substr(semi + 1))};
    } catch (const ParseError &e) {
        throw e.shifted(semi + 1);
    }
}

namespace {

template <class T, class Parse> std::array<T, 3> parse_three(std::string_view text, Parse parse) {
    std::array<T, 3> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t slash = text.find('/', start);
        if ((i < 2) != (slash != std::string_view::npos))
            throw ParseError(i < 2 ? "triple needs three '/'-separated entries" : "more than three entries in triple",
                             i < 2 ? 0 : slash + 1);
        const std::size_t end = i < 2 ? slash : text.size();
        try {
            out[i] = parse(text.substr(start, end - start));
        } catch (const ParseError &e) {
            throw e.shifted(start);
        }
        start = end + 1;
    }
    return out;
}

} // namespace

std::array<Partition, 3> parse_triple(std::string_view text) {
    return parse_three<Partition>(text, [](std::string_view t) { return parse_partition(t); });
}

std::array<DoublePartition, 3> parse_double_triple(std::string_view text) {
    return parse_three<DoublePartition>(text, [](std::string_view t) { return parse_double_partition(t); });
}

std::string format_triple(const Partition &a, const Partition &b, const Partition &c) {
    return format_partition(a) + " / " + format_partition(b) + " / " + format_partition(c);
}

std::string format_double_partition(const DoublePartition &p) {
    return format_partition(p.plus) + ";" + format_partition(p.minus);
}

int part_at(const Partition &p, int i) { return p.at(i); }

Partition add_scaled(const Partition &p, int d, const Partition &direction) {
    if (d < 0)
        throw DomainError("add_scaled needs d >= 0");
    const int len = std::max(p.length(), direction.length());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        parts[static_cast<std::size_t>(i)] = p.at(i + 1) + d * direction.at(i + 1);
    return Partition(std::move(parts));
}

DoublePartition add_scaled(const DoublePartition &p, int d, const DoublePartition &direction) {
    return {add_scaled(p.plus, d, direction.plus), add_scaled(p.minus, d, direction.minus)};
}

Partition scale(const Partition &p, int d) { return add_scaled(Partition{}, d, p); }

Partition conjugate(const Partition &p) {
    if (p.empty())
        return {};
    std::vector<int> c(static_cast<std::size_t>(p[0]), 0);
    for (int row : p.parts())
        for (int j = 0; j < row; ++j)
            ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

Partition drop_first(const Partition &p) {
    if (p.empty())
        return {};
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

bool contains(const Partition &outer, const Partition &inner) {
    if (inner.length() > outer.length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)])
            return false;
    return true;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class dim_sn(const Partition &p) {
    const Partition c = conjugate(p);
    mpz_class hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            hooks *= (p[static_cast<std::size_t>(i)] - j - 1) + (c[static_cast<std::size_t>(j)] - i - 1) + 1;
    return factorial(p.size()) / hooks;
}

mpz_class dim_gl(const Partition &p, int n) {
    if (p.length() > n)
        return 0;
    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= p.at(i) - p.at(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

void for_each_partition(int n, int max_part, const std::function<void(const Partition &)> &visit) {
    if (n < 0)
        return;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            visit(Partition(cur));
            return;
        }
        for (int k = std::min(remaining, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, max_part);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, n, [&](const Partition &p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of(int n, int max_length) {
    std::vector<Partition> out;
    for_each_partition(n, n, [&](const Partition &p) {
        if (p.length() <= max_length)
            out.push_back(p);
    });
    return out;
}

} // namespace kronstab
