#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mergecalc {

// Closed-form interval for one extremal quantity. `quantity` is "M" (distinct sources)
// or "M*" (identical source).
struct BoundTable {
    std::string quantity;
    std::vector<int> params;
    long long lower = 0;
    long long upper = 0;
    std::vector<std::string> formulas;  // ids of the closed forms that produced lower/upper

    bool contains(long long value) const { return lower <= value && value <= upper; }
    std::string label() const;  // e.g. "M(3,3)"
};

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

// M(m,n): [2mn-m-n+1, (m+n-1)+(mn-2)floor((m+n-2)/2)], tightened by 14n when one side is 3.
BoundTable bounds_m(int m, int n);
// M*(n,n): [(n-1)^2, ceil(n/2)(n^2-4n+5)].
BoundTable bounds_m_star(int n);

// Derived lower bounds on M(n,n) from identical-source values, each evaluated with the
// M* lower bound: 2M*(n,n)+n and M*(n+1,n+1)+M*(n-1,n-1)+(n-1).
long long m_lower_from_back_to_back(int n, long long m_star_n);
long long m_lower_from_shifted(int n, long long m_star_up, long long m_star_down);
// M*(n_1,...,n_k) >= sum over i<k of M*(n_i,n_i).
long long m_star_chain_lower(const std::vector<long long>& m_star_values);

// Exact values proven in closed form for some multi-group parameter shapes.
// ones: (1,...,1) with k entries -> floor(k^2/4).
long long ones_value(int k);
// (1,...,1,2) with k ones.
long long ones_two_value(int k);
// (1,...,1,n) with k ones; only defined for 4n >= 3k-1.
std::optional<long long> ones_n_value(int k, int n);
// (1,2,n).
long long one_two_n_value(int n);

// Dispatch on a parameter tuple: "M" with (m,n), (1,...,1), (1,...,1,2), (1,...,1,n),
// (1,2,n); "M*" with (n,n). Throws ParseError for shapes without a closed form.
BoundTable bound_tables(const std::string& quantity, std::vector<int> params);

enum class KnownSource { Theorem, ComputerSearch, ClosedFormPin };

struct KnownValue {
    std::string quantity;
    std::vector<int> params;
    long long value = 0;
    KnownSource source = KnownSource::Theorem;

    std::string label() const;
};

// Published exact values: the closed-form theorems instantiated at small parameters plus
// the list obtained by computer search.
const std::vector<KnownValue>& known_values();

}  // namespace mergecalc
