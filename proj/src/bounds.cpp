#include "mergecalc/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "mergecalc/error.hpp"

namespace mergecalc {

namespace {

std::string tuple_text(const std::vector<int>& params) {
    std::ostringstream out;
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
    return out.str();
}

void require_positive(const std::vector<int>& params) {
    if (params.empty()) throw MergeError(ErrorKind::ParseError, "empty parameter tuple");
    for (int p : params) {
        if (p < 1) throw MergeError(ErrorKind::ParamTooSmall, "parameters must be positive, got " + tuple_text(params));
    }
}

BoundTable exact(const std::string& quantity, std::vector<int> params, long long value, std::string formula) {
    return {quantity, std::move(params), value, value, {std::move(formula)}};
}

}  // namespace

std::string BoundTable::label() const { return quantity + "(" + tuple_text(params) + ")"; }
std::string KnownValue::label() const { return quantity + "(" + tuple_text(params) + ")"; }

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

BoundTable bounds_m(int m, int n) {
    require_positive({m, n});
    if (m > n) std::swap(m, n);
    const long long mm = m;
    const long long nn = n;
    BoundTable t;
    t.quantity = "M";
    t.params = {m, n};
    t.lower = 2 * mm * nn - mm - nn + 1;
    t.upper = (mm + nn - 1) + (mm * nn - 2) * floor_div(mm + nn - 2, 2);
    t.formulas = {"2mn-m-n+1", "(m+n-1)+(mn-2)floor((m+n-2)/2)"};
    long long other = m == 3 ? nn : (n == 3 ? mm : 0);
    if (other > 0 && 14 * other < t.upper) {
        t.upper = 14 * other;
        t.formulas.push_back("M(3,n)<=14n");
    }
    return t;
}

BoundTable bounds_m_star(int n) {
    require_positive({n});
    const long long nn = n;
    BoundTable t;
    t.quantity = "M*";
    t.params = {n, n};
    t.lower = (nn - 1) * (nn - 1);
    t.upper = ceil_div(nn, 2) * (nn * nn - 4 * nn + 5);
    t.formulas = {"(n-1)^2", "ceil(n/2)(n^2-4n+5)"};
    return t;
}

long long m_lower_from_back_to_back(int n, long long m_star_n) { return 2 * m_star_n + n; }

long long m_lower_from_shifted(int n, long long m_star_up, long long m_star_down) {
    return m_star_up + m_star_down + (n - 1);
}

long long m_star_chain_lower(const std::vector<long long>& m_star_values) {
    long long sum = 0;
    for (std::size_t i = 0; i + 1 < m_star_values.size(); ++i) sum += m_star_values[i];
    return sum;
}

long long ones_value(int k) { return static_cast<long long>(k) * k / 4; }

long long ones_two_value(int k) { return k <= 6 ? 3LL * k - 1 : ones_value(k) + k + 2; }

std::optional<long long> ones_n_value(int k, int n) {
    if (4LL * n < 3LL * k - 1) return std::nullopt;
    return static_cast<long long>(n) * k + ones_value(k);
}

long long one_two_n_value(int n) { return (n == 2 || n == 3) ? 4LL * n : 4LL * n + 1; }

BoundTable bound_tables(const std::string& quantity, std::vector<int> params) {
    require_positive(params);
    if (quantity == "M*") {
        if (params.size() == 1) return bounds_m_star(params[0]);
        if (params.size() == 2) {
            // M*(m,n) = M*(n,n) for m >= n
            auto t = bounds_m_star(std::min(params[0], params[1]));
            t.params = params;
            return t;
        }
        throw MergeError(ErrorKind::ParseError, "no closed form for M*(" + tuple_text(params) + ")");
    }
    if (quantity != "M") throw MergeError(ErrorKind::ParseError, "unknown quantity '" + quantity + "'");
    std::sort(params.begin(), params.end());
    if (params.size() == 1) throw MergeError(ErrorKind::ParseError, "M needs at least two cuts");
    if (params.size() == 2) return bounds_m(params[0], params[1]);

    const int k = static_cast<int>(std::count(params.begin(), params.end(), 1));
    const int l = static_cast<int>(params.size());
    if (k == l) return exact("M", params, ones_value(k), "floor(k^2/4)");
    if (k == l - 1) {
        const int n = params.back();
        if (n == 2) return exact("M", params, ones_two_value(k), k <= 6 ? "3k-1" : "floor(k^2/4)+k+2");
        if (auto v = ones_n_value(k, n)) return exact("M", params, *v, "nk+floor(k^2/4)");
    }
    if (l == 3 && params[0] == 1 && params[1] == 2) {
        const int n = params[2];
        return exact("M", params, one_two_n_value(n), (n == 2 || n == 3) ? "4n" : "4n+1");
    }
    throw MergeError(ErrorKind::ParseError, "no closed form for M(" + tuple_text(params) + ")");
}

const std::vector<KnownValue>& known_values() {
    using K = KnownSource;
    static const std::vector<KnownValue> table = [] {
        std::vector<KnownValue> t;
        for (int n = 1; n <= 4; ++n) t.push_back({"M", {1, n}, n, K::Theorem});
        for (int n = 2; n <= 6; ++n) t.push_back({"M", {2, n}, 3LL * n - 1, K::Theorem});
        t.push_back({"M", {3, 3}, 13, K::Theorem});
        t.push_back({"M*", {2, 2}, 1, K::Theorem});
        t.push_back({"M*", {3, 3}, 4, K::ClosedFormPin});
        t.push_back({"M*", {4, 4}, 9, K::Theorem});
        for (int k = 3; k <= 5; ++k) t.push_back({"M", std::vector<int>(static_cast<std::size_t>(k), 1), ones_value(k), K::Theorem});
        for (int n = 2; n <= 4; ++n) t.push_back({"M", {1, 2, n}, one_two_n_value(n), K::Theorem});
        t.push_back({"M", {3, 4}, 18, K::ComputerSearch});
        t.push_back({"M", {3, 5}, 23, K::ComputerSearch});
        t.push_back({"M", {3, 6}, 28, K::ComputerSearch});
        t.push_back({"M", {4, 4}, 27, K::ComputerSearch});
        t.push_back({"M*", {5, 5}, 16, K::ComputerSearch});
        t.push_back({"M*", {6, 6}, 27, K::ComputerSearch});
        t.push_back({"M", {2, 2, 2}, 11, K::ComputerSearch});
        t.push_back({"M", {1, 3, 3}, 17, K::ComputerSearch});
        t.push_back({"M", {2, 2, 3}, 18, K::ComputerSearch});
        t.push_back({"M*", {2, 3, 3}, 5, K::ComputerSearch});
        t.push_back({"M*", {2, 4, 4}, 10, K::ComputerSearch});
        t.push_back({"M*", {2, 5, 5}, 17, K::ComputerSearch});
        t.push_back({"M*", {3, 3, 3}, 8, K::ComputerSearch});
        t.push_back({"M*", {3, 4, 4}, 13, K::ComputerSearch});
        t.push_back({"M*", {4, 4, 4}, 18, K::ComputerSearch});
        return t;
    }();
    return table;
}

}  // namespace mergecalc
