#include "wilsonx/kernels.hpp"

namespace wilsonx::kernels {

uint64_t product_scalar(uint64_t n, uint64_t c, uint64_t* out) {
    out[0] = 1 % n;
    for (uint64_t j = 1; j <= c; ++j) out[j] = 0;
    for (uint64_t m = 1; m < n; ++m) {
        for (uint64_t j = c; j > 0; --j) {
            out[j] = static_cast<uint64_t>(
                (static_cast<unsigned __int128>(out[j]) * m + out[j - 1]) % n);
        }
        out[0] = static_cast<uint64_t>(
            static_cast<unsigned __int128>(out[0]) * m % n);
    }
    return (n - 1) * (c + 1);
}

void product_batch_scalar(const uint64_t* ns, std::size_t lanes, uint64_t c,
                          uint64_t* out) {
    for (std::size_t i = 0; i < lanes; ++i)
        product_scalar(ns[i], c, out + i * (c + 1));
}

}  // namespace wilsonx::kernels
