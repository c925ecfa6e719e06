#pragma once

// Test-only reference implementations. These deliberately share no code with
// the library: plain int64 counts, reactions written out from the reaction
// table by hand, and a depth-first closure instead of the library's BFS.

#include <cstdint>
#include <set>
#include <stack>
#include <vector>

namespace brute {

using Vec = std::vector<std::int64_t>;

struct Rule {
    int a, b, c, d;  // a + b -> c + d, indices into Vec
};

// Z0..Zn occupy 0..n, then B = n+1, R = n+2.
inline std::vector<Rule> family_rules(int m, int n, bool omega)
{
    const int B = n + 1;
    const int R = n + 2;
    std::vector<Rule> rules;
    for (int i = 0; i < n; ++i) {
        rules.push_back({i, i, i + 1, i < m ? B : R});
    }
    rules.push_back({n, n, n, R});
    rules.push_back({B, R, R, R});
    if (omega) {
        rules.push_back({R, n, B, n});
    }
    return rules;
}

// The guarded multiset rewrite, one reaction at a time.
inline bool fire(Vec& s, const Rule& r)
{
    if (r.a == r.b ? s[r.a] < 2 : (s[r.a] < 1 || s[r.b] < 1)) {
        return false;
    }
    --s[r.a];
    --s[r.b];
    ++s[r.c];
    ++s[r.d];
    return true;
}

struct Closure {
    std::set<Vec> states;
    std::set<Vec> terminals;
    std::size_t edges = 0;
};

inline Closure closure(const std::vector<Rule>& rules, const Vec& init)
{
    Closure c;
    std::stack<Vec> todo;
    c.states.insert(init);
    todo.push(init);
    while (!todo.empty()) {
        const Vec s = todo.top();
        todo.pop();
        bool live = false;
        for (const auto& r : rules) {
            Vec t = s;
            if (!fire(t, r)) {
                continue;
            }
            live = true;
            ++c.edges;
            if (c.states.insert(t).second) {
                todo.push(t);
            }
        }
        if (!live) {
            c.terminals.insert(s);
        }
    }
    return c;
}

inline Vec family_init(int n, std::int64_t p)
{
    Vec v(static_cast<std::size_t>(n) + 3, 0);
    v[0] = p;
    return v;
}

// Number of nonnegative integer vectors of length s summing to p, by listing them.
inline std::uint64_t simplex_points(int s, int p)
{
    if (s == 1) {
        return 1;
    }
    std::uint64_t total = 0;
    for (int first = 0; first <= p; ++first) {
        total += simplex_points(s - 1, p - first);
    }
    return total;
}

} // namespace brute
