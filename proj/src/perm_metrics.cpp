#include "chanspace/perm_metrics.hpp"

#include "chanspace/errors.hpp"

namespace chanspace {

namespace {

void require_closed_form_size(const Ranking& sigma) {
    if (sigma.size() > kMaxClosedFormSize) throw TooLarge(sigma.size(), kMaxClosedFormSize);
}

void require_same_size(const Ranking& sigma, const Ranking& phi) {
    if (sigma.size() != phi.size())
        throw DimensionMismatch("rankings of sizes " + std::to_string(sigma.size()) + " and " +
                                std::to_string(phi.size()));
}

}  // namespace

Rat AgreementCount::probability() const { return Rat(value, nonempty_code_count(n)); }

int agreement_exponent(const Ranking& sigma, int input) {
    const int n = sigma.size();
    if (input < 0 || input >= n) throw IndexOutOfRange("input", input);
    const auto& ranks = sigma.ranks();
    int count = 0;
    for (int j = input + 1; j < n; ++j)
        if (ranks[input] <= ranks[j]) ++count;
    return count;
}

std::vector<int> agreement_exponents(const Ranking& sigma) {
    require_closed_form_size(sigma);
    const int n = sigma.size();
    const auto& ranks = sigma.ranks();
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ranks[i] <= ranks[j]) ++out[i];
    return out;
}

AgreementCount agreement_count(const Ranking& sigma) {
    Int total = 0;
    for (int exponent : agreement_exponents(sigma)) total += pow2(exponent);
    return AgreementCount{total, sigma.size()};
}

AgreementCount agreement_count(const Ranking& sigma, const Ranking& phi) {
    require_same_size(sigma, phi);
    return agreement_count(compose(phi.inverse(), sigma));
}

Rat agreement_probability(const Ranking& sigma, const Ranking& phi) {
    return agreement_count(sigma, phi).probability();
}

Rat decoding_distance(const Ranking& sigma, const Ranking& phi) {
    return 1 - agreement_probability(sigma, phi);
}

Int adjacent_swap_delta(const Ranking& sigma, int r) {
    require_closed_form_size(sigma);
    const int n = sigma.size();
    if (r < 0 || r + 1 >= n) throw IndexOutOfRange("transposition", r);
    const auto& ranks = sigma.ranks();
    if (ranks[r] < ranks[r + 1]) return -pow2(agreement_exponent(sigma, r) - 1);
    return pow2(agreement_exponent(sigma, r + 1));
}

std::uint64_t kendall_tau(const Ranking& sigma, const Ranking& phi) {
    require_same_size(sigma, phi);
    require_closed_form_size(sigma);
    Ranking quotient = compose(phi.inverse(), sigma);
    const auto& order = quotient.rank_order();
    std::uint64_t inversions = 0;
    for (size_t a = 0; a < order.size(); ++a)
        for (size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b]) ++inversions;
    return inversions;
}

}  // namespace chanspace
