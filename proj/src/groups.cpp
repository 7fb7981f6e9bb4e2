#include "bgk/groups.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bgk {

std::string GroupType::display() const {
    if (!name.empty())
        return name;
    std::string s = "type:{";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    s += '}';
    return s;
}

static GroupType make(std::vector<int> entries, std::string name, long long dim) {
    std::sort(entries.begin(), entries.end());
    return GroupType{std::move(entries), std::move(name), dim};
}

// n_i = 2..n
static GroupType special_unitary(int n) {
    if (n < 2)
        throw std::invalid_argument("SU(" + std::to_string(n) + ") is not in the catalog (need n >= 2)");
    std::vector<int> e;
    for (int i = 2; i <= n; ++i)
        e.push_back(i);
    return make(std::move(e), "SU(" + std::to_string(n) + ")", 1LL * n * n - 1);
}

// n_i = 2, 4, ..., 2n
static GroupType symplectic(int n) {
    if (n < 1)
        throw std::invalid_argument("Sp(" + std::to_string(n) + ") is not in the catalog (need n >= 1)");
    std::vector<int> e;
    for (int i = 1; i <= n; ++i)
        e.push_back(2 * i);
    return make(std::move(e), "Sp(" + std::to_string(n) + ")", 1LL * n * (2 * n + 1));
}

static GroupType spin(int n) {
    if (n < 3)
        throw std::invalid_argument("Spin(" + std::to_string(n) + ") is not in the catalog (need n >= 3)");
    switch (n) {
        case 3: return special_unitary(2);
        case 4: throw std::invalid_argument("Spin(4) is not simple");
        case 5: return symplectic(2);
        case 6: return special_unitary(4);
        default: break;
    }
    const long long dim = 1LL * n * (n - 1) / 2;
    std::vector<int> e;
    if (n % 2 == 1) {
        // Spin(2m+1): 2, 4, ..., 2m
        for (int i = 2; i <= n - 1; i += 2)
            e.push_back(i);
    } else {
        // Spin(2m): 2, 4, ..., 2m-2 plus an extra m; duplicate kept for even m
        for (int i = 2; i <= n - 2; i += 2)
            e.push_back(i);
        e.push_back(n / 2);
    }
    return make(std::move(e), "Spin(" + std::to_string(n) + ")", dim);
}

GroupType lookup_group(const std::string& name) {
    std::string low;
    for (char c : name)
        low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "g2") return make({2, 6}, "G2", 14);
    if (low == "f4") return make({2, 6, 8, 12}, "F4", 52);
    if (low == "e6") return make({2, 5, 6, 8, 9, 12}, "E6", 78);
    if (low == "e7") return make({2, 6, 8, 10, 12, 14, 18}, "E7", 133);
    if (low == "e8") return make({2, 8, 12, 14, 18, 20, 24, 30}, "E8", 248);

    auto argument = [&](size_t prefix_len, const char* family) -> int {
        if (low.size() < prefix_len + 3 || low[prefix_len] != '(' || low.back() != ')')
            throw std::invalid_argument("unknown group \"" + name + "\"");
        long long n = 0;
        for (size_t i = prefix_len + 1; i + 1 < low.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(low[i])))
                throw std::invalid_argument("unknown group \"" + name + "\"");
            n = n * 10 + (low[i] - '0');
            if (n > 1000000)
                throw std::invalid_argument(std::string(family) + " argument too large in \"" + name + "\"");
        }
        return static_cast<int>(n);
    };

    if (low.rfind("spin", 0) == 0) return spin(argument(4, "Spin"));
    if (low.rfind("su", 0) == 0) return special_unitary(argument(2, "SU"));
    if (low.rfind("sp", 0) == 0) return symplectic(argument(2, "Sp"));
    throw std::invalid_argument("unknown group \"" + name + "\"");
}

namespace {

/* Cursor over the raw spec text; positions in error messages refer to the
 * original string. */
struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("syntax error at position " + std::to_string(pos) +
                                    " in group spec \"" + s + "\": " + what);
    }

    long long integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        long long n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            n = n * 10 + (s[pos] - '0');
            if (n > 1000000000)
                fail("number too large");
            ++pos;
        }
        return n;
    }

    bool try_literal(const std::string& lit) {
        skip_ws();
        if (s.size() - pos < lit.size())
            return false;
        for (size_t i = 0; i < lit.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(s[pos + i])) != lit[i])
                return false;
        pos += lit.size();
        return true;
    }
};

GroupType parse_type_literal(Cursor& cur) {
    std::vector<int> entries;
    while (true) {
        size_t at = cur.pos;
        long long n = cur.integer();
        if (n < 2) {
            cur.pos = at;
            cur.fail("type entry " + std::to_string(n) + " is below 2");
        }
        if (n > 1000000) {
            cur.pos = at;
            cur.fail("type entry too large");
        }
        entries.push_back(static_cast<int>(n));
        cur.skip_ws();
        if (cur.peek() == ',') {
            ++cur.pos;
            continue;
        }
        break;
    }
    std::optional<long long> dim;
    if (cur.try_literal("@dim=")) {
        dim = cur.integer();
    }
    if (!cur.done())
        cur.fail("unexpected trailing input");
    std::sort(entries.begin(), entries.end());
    return GroupType{std::move(entries), "", dim};
}

}  // namespace

GroupType parse_group_spec(const std::string& text) {
    Cursor cur{text};
    if (cur.done())
        cur.fail("empty group spec");
    if (cur.try_literal("type:"))
        return parse_type_literal(cur);

    // Otherwise a catalog name: an alphabetic family, then "(n)" or a digit.
    cur.skip_ws();
    size_t start = cur.pos;
    std::string word;
    while (cur.pos < text.size() && std::isalpha(static_cast<unsigned char>(text[cur.pos]))) {
        word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[cur.pos])));
        ++cur.pos;
    }
    if (word.empty())
        cur.fail("expected a group name or \"type:\"");
    std::string canonical = word;
    cur.skip_ws();
    if (cur.peek() == '(') {
        ++cur.pos;
        long long n = cur.integer();
        cur.skip_ws();
        if (cur.peek() != ')')
            cur.fail("expected ')'");
        ++cur.pos;
        canonical += "(" + std::to_string(n) + ")";
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        canonical += static_cast<char>(cur.peek());
        ++cur.pos;
    } else {
        cur.pos = start;
        cur.fail("incomplete group name \"" + word + "\"");
    }
    if (!cur.done())
        cur.fail("unexpected trailing input");
    return lookup_group(canonical);  // lookup_group reports unknown names
}

bool dimension_check(const GroupType& t) {
    if (!t.dim)
        throw std::invalid_argument("no dimension recorded for " + t.display());
    long long sum = 0;
    for (int n : t.entries)
        sum += 2LL * n - 1;
    return sum == *t.dim;
}

}  // namespace bgk
