#include "gaugepoly/surgery_signs.hpp"

#include <stdexcept>

namespace gp::ngon {

long SurgerySignData::pair(const std::array<long, 2>& x, const std::array<long, 2>& y) const {
    long s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += x[i] * pairing[i][j] * y[j];
    return s;
}

void SurgerySignData::validate() const {
    if (pairing[0][0] != 0 || pairing[1][1] != 0 || pairing[0][1] != -pairing[1][0])
        throw std::invalid_argument("pairing must be skew-symmetric");
    long det = pairing[0][0] * pairing[1][1] - pairing[0][1] * pairing[1][0];
    if (det != 1) throw std::invalid_argument("pairing must have determinant one");
}

EpsilonResult epsilon_signs(const SurgerySignData& data, int N) {
    data.validate();
    if (N < 1) throw std::invalid_argument("N must be positive");

    auto dot = [&](int j) {
        std::array<long, 2> v{data.lambda[0] + long(j) * data.mu[0],
                              data.lambda[1] + long(j) * data.mu[1]};
        return data.pair(v, data.nu);
    };

    EpsilonResult out;
    for (int j = 1; j <= N; ++j) {
        long a = dot(j - 1);
        long b = dot(j);
        int e;
        if (a == 0 && b == 0)
            throw std::invalid_argument(
                "degenerate sign data: (λ+(j-1)μ)·ν and (λ+jμ)·ν both vanish");
        else if (a == 0)
            e = 0;
        else if (b == 0)
            e = 1;
        else
            e = ((a > 0) == (b > 0)) ? 0 : 1;
        out.eps_prime.push_back(e);
    }

    out.eps.assign(N + 1, 0);
    if (N % 2 == 0) {
        int acc = 0;
        for (int i = 1; i <= N; ++i) {
            acc += out.eps_prime[i - 1];
            out.eps[i] = acc;
        }
    }

    out.degree_table.assign(N + 1, {});
    for (int j = 0; j <= N; ++j) {
        for (int k = 1; k <= N - j; ++k) {
            int deg = (k - 1) % 2;
            if (N % 2 == 0) {
                int s = 0;
                for (int m = j + 1; m <= j + k; ++m) s += out.eps_prime[m - 1];
                deg = (deg + s) % 2;
            }
            out.degree_table[j].push_back(deg);
        }
    }
    return out;
}

}  // namespace gp::ngon
