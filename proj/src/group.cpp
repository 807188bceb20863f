#include "ramfilt/group.hpp"

#include "ramfilt/arith.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace ramfilt {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

Subgroup to_elements(Mask m) {
    Subgroup out;
    for (std::size_t i = 0; m; ++i, m >>= 1) {
        if (m & 1) out.push_back(i);
    }
    return out;
}

/// Subgroup generated by gens: breadth-first closure of {e} under right
/// multiplication by generators (enough in a finite group).
Mask generate(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
    Mask seen = bit(0);
    std::vector<std::size_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto x = queue[head];
        for (auto s : gens) {
            const auto y = g.mul(x, s);
            if (!(seen & bit(y))) {
                seen |= bit(y);
                queue.push_back(y);
            }
        }
    }
    return seen;
}

void require_enumerable(const FiniteGroup& group) {
    if (group.order() > FiniteGroup::kMaxOrder) {
        throw ValidationError("group order " + std::to_string(group.order()) + " exceeds the enumeration budget of " +
                              std::to_string(FiniteGroup::kMaxOrder));
    }
}

std::vector<Mask> subgroup_masks(const FiniteGroup& group) {
    require_enumerable(group);
    const std::size_t n = group.order();
    std::map<Mask, std::vector<std::size_t>> found;  // subgroup -> a generating set
    std::vector<Mask> frontier;
    for (std::size_t x = 0; x < n; ++x) {
        const Mask m = generate(group, {x});
        if (found.emplace(m, std::vector<std::size_t>{x}).second) frontier.push_back(m);
    }
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask m : frontier) {
            const auto gens = found.at(m);
            for (std::size_t x = 0; x < n; ++x) {
                if (m & bit(x)) continue;
                auto joined_gens = gens;
                joined_gens.push_back(x);
                const Mask joined = generate(group, joined_gens);
                if (found.emplace(joined, std::move(joined_gens)).second) next.push_back(joined);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Mask> out;
    out.reserve(found.size());
    for (const auto& kv : found) out.push_back(kv.first);
    return out;
}

std::vector<Subgroup> sorted_subgroups(const std::vector<Mask>& masks) {
    std::vector<Subgroup> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.push_back(to_elements(m));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw ValidationError("a group has at least one element");
    std::vector<std::string> problems;
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[a].size() != n) {
            throw ValidationError("Cayley table row " + std::to_string(a) + " has " +
                                  std::to_string(table_[a].size()) + " entries, expected " + std::to_string(n));
        }
        for (auto x : table_[a]) {
            if (x >= n) throw ValidationError("Cayley table entry " + std::to_string(x) + " out of range");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[0][a] != a || table_[a][0] != a) {
            problems.push_back("element 0 is not the identity (row/column " + std::to_string(a) + ")");
            break;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> row(n), col(n);
        for (std::size_t b = 0; b < n; ++b) {
            row[table_[a][b]] = true;
            col[table_[b][a]] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end()) {
            problems.push_back("row " + std::to_string(a) + " is not a permutation");
        }
        if (std::find(col.begin(), col.end(), false) != col.end()) {
            problems.push_back("column " + std::to_string(a) + " is not a permutation");
        }
    }
    if (problems.empty() && n <= kMaxOrder) {
        for (std::size_t a = 0; a < n && problems.empty(); ++a) {
            for (std::size_t b = 0; b < n && problems.empty(); ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        problems.push_back("not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                                           ", " + std::to_string(c) + ")");
                        break;
                    }
                }
            }
        }
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

std::size_t FiniteGroup::power(std::size_t a, std::uint64_t k) const {
    std::size_t result = 0;
    for (std::uint64_t i = 0; i < k; ++i) result = mul(result, a);
    return result;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_commutative() const {
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        }
    }
    return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) throw ValidationError("dihedral group needs n >= 1");
    // r^i s^j stored at i + n*j; (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b + d}
    const std::size_t order = 2 * n;
    std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
    for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
            const std::size_t r = b == 0 ? (a + c) % n : (a + n - c) % n;
            t[x][y] = r + n * ((b + d) % 2);
        }
    }
    return FiniteGroup(std::move(t));
}

FiniteGroup quaternion_group() {
    // Units 1, i, j, k with sign: element 2*u + s means (-1)^s * unit[u].
    // unit products: u*v = sign * unit[w]
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            const std::size_t u = x / 2, v = y / 2;
            const std::size_t s = (x % 2 + y % 2 + kSign[u][v]) % 2;
            t[x][y] = 2 * static_cast<std::size_t>(kUnit[u][v]) + s;
        }
    }
    return FiniteGroup(std::move(t));
}

FiniteGroup heisenberg_group(std::uint64_t p) {
    if (!is_prime(static_cast<std::int64_t>(p))) throw ValidationError("Heisenberg group needs a prime p");
    // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]], stored at a + p b + p^2 c
    const std::size_t n = p * p * p;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
            const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
            const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
            t[x][y] = ra + p * rb + p * p * rc;
        }
    }
    return FiniteGroup(std::move(t));
}

FiniteGroup builtin_group(const std::string& name) {
    const auto factor = [](const std::string& tok) -> FiniteGroup {
        const auto number = [&](std::size_t skip) -> std::size_t {
            const auto digits = tok.substr(skip);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
                throw ValidationError("unknown builtin group '" + tok + "'");
            }
            return std::stoul(digits);
        };
        if (tok == "trivial") return cyclic_group(1);
        if (tok == "klein4") return direct_product(cyclic_group(2), cyclic_group(2));
        if (tok == "q8") return quaternion_group();
        if (tok.rfind("heis", 0) == 0) return heisenberg_group(number(4));
        if (tok.rfind("c", 0) == 0) return cyclic_group(number(1));
        if (tok.rfind("d", 0) == 0) return dihedral_group(number(1));
        throw ValidationError("unknown builtin group '" + tok + "'");
    };
    std::vector<std::string> tokens;
    std::stringstream ss(name);
    for (std::string tok; std::getline(ss, tok, 'x');) tokens.push_back(tok);
    if (tokens.empty()) throw ValidationError("empty group name");
    FiniteGroup g = factor(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); ++i) g = direct_product(g, factor(tokens[i]));
    return g;
}

FiniteGroup parse_cayley_table(std::istream& in) {
    long long n = 0;
    if (!(in >> n) || n < 1) throw ValidationError("Cayley table: expected a positive order on the first line");
    std::vector<std::vector<std::size_t>> t(static_cast<std::size_t>(n), std::vector<std::size_t>(n));
    for (auto& row : t) {
        for (auto& x : row) {
            long long v = 0;
            if (!(in >> v)) throw ValidationError("Cayley table: expected " + std::to_string(n * n) + " entries");
            if (v < 0 || v >= n) throw ValidationError("Cayley table entry " + std::to_string(v) + " out of range");
            x = static_cast<std::size_t>(v);
        }
    }
    std::string extra;
    if (in >> extra) throw ValidationError("Cayley table: trailing data '" + extra + "'");
    return FiniteGroup(std::move(t));
}

std::string format_cayley_table(const FiniteGroup& group) {
    std::ostringstream out;
    out << group.order() << '\n';
    for (const auto& row : group.table()) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

std::uint64_t prime_of_p_group(const FiniteGroup& group) {
    const std::uint64_t n = group.order();
    for (std::uint64_t q = 2; q <= n; ++q) {
        if (n % q == 0) return is_power_of(n, q) ? q : 0;
    }
    return 0;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
    return sorted_subgroups(subgroup_masks(group));
}

std::vector<Subgroup> index_p_subgroups(const FiniteGroup& group, std::uint64_t p) {
    require_prime(static_cast<std::int64_t>(p), "index_p_subgroups");
    if (group.order() == 1) return {};
    if (group.order() % p != 0) {
        throw ValidationError("p = " + std::to_string(p) + " does not divide the group order " +
                              std::to_string(group.order()));
    }
    const auto target = static_cast<int>(group.order() / p);
    std::vector<Mask> picked;
    for (Mask m : subgroup_masks(group)) {
        if (std::popcount(m) == target) picked.push_back(m);
    }
    return sorted_subgroups(picked);
}

bool has_intersection_property(const FiniteGroup& group, std::uint64_t p) {
    require_prime(static_cast<std::int64_t>(p), "has_intersection_property");
    if (!is_power_of(group.order(), p)) {
        throw ValidationError("group of order " + std::to_string(group.order()) + " is not a " +
                              std::to_string(p) + "-group");
    }
    const auto masks = subgroup_masks(group);
    const auto target = static_cast<int>(group.order() / p);
    std::vector<Mask> maximal;
    if (group.order() > 1) {
        for (Mask m : masks) {
            if (std::popcount(m) == target) maximal.push_back(m);
        }
    }
    const Mask everything = full_mask(group.order());
    for (Mask sub : masks) {
        Mask meet = everything;
        for (Mask h : maximal) {
            if ((sub & h) == sub) meet &= h;
        }
        if (meet != sub) return false;
    }
    return true;
}

bool is_elementary_abelian(const FiniteGroup& group, std::uint64_t p) {
    if (!group.is_commutative()) return false;
    for (std::size_t a = 1; a < group.order(); ++a) {
        if (group.element_order(a) != p) return false;
    }
    return true;
}

}  // namespace ramfilt
