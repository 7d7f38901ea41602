#include "secdom/formulas.hpp"

namespace secdom {

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

int p2_path_value(int n) { return ceil_div(3LL * n + 1, 4); }

} // namespace

FormulaResult gamma_s_formula(const FamilyInstance& inst) {
    inst.validate();
    const int n = inst.n;
    switch (inst.family) {
    case Family::p2xpn:
        return {inst.family, n, p2_path_value(n), "n >= 2"};
    case Family::p2xcn:
        if (n % 8 == 0)
            return {inst.family, n, 3 * n / 4, "n = 0 mod 8"};
        return {inst.family, n, p2_path_value(n), "otherwise"};
    case Family::m2n:
        if (n % 8 == 4)
            return {inst.family, n, 3 * n / 4, "n = 4 mod 8"};
        return {inst.family, n, p2_path_value(n), "otherwise"};
    case Family::p3xpn:
        if (n <= 8 || n == 10)
            return {inst.family, n, n + 1, "n <= 8 or n = 10"};
        return {inst.family, n, n + 2, "n = 9 or n >= 11"};
    case Family::p3xcn:
        if (n == 4 || n == 7)
            return {inst.family, n, n + 1, "n = 4, 7"};
        return {inst.family, n, 3 * ceil_div(n, 3), "otherwise"};
    }
    throw ContractError("unknown family");
}

int winter_formula(int n) {
    if (n < 3)
        throw InvalidSizeError("winter_formula needs n >= 3");
    return (n + 7) / 8 + (n + 4) / 8 + (n + 2) / 4 + (n + 1) / 4;
}

int upper_bound_formula(const FamilyInstance& inst) {
    inst.validate();
    const int n = inst.n;
    switch (inst.family) {
    case Family::p2xpn:
        return p2_path_value(n);
    case Family::p2xcn:
        if (n % 8 != 0)
            throw NotApplicableError("p2xcn pattern bound needs n = 0 mod 8");
        return 3 * n / 4;
    case Family::m2n:
        if (n % 8 != 4)
            throw NotApplicableError("m2n pattern bound needs n = 4 mod 8");
        return 3 * n / 4;
    case Family::p3xpn:
        return n + 2;
    case Family::p3xcn:
        return 3 * ceil_div(n, 3);
    }
    throw ContractError("unknown family");
}

} // namespace secdom
