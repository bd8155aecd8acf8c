#include "sglab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace sglab::fft {

namespace {

std::mutex plan_mutex;

fftw_plan plan_2d(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find({n, sign});
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(std::size_t(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(tmp.data());
    fftw_plan p = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_2d failed");
    cache[{n, sign}] = p;
    return p;
}

fftw_plan plan_1d(int len, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find({len, sign});
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(len);
    auto* buf = reinterpret_cast<fftw_complex*>(tmp.data());
    fftw_plan p = fftw_plan_dft_1d(len, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
    cache[{len, sign}] = p;
    return p;
}

}  // namespace

void c2c_2d(cplx* data, int n, int sign) {
    fftw_plan p = plan_2d(n, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
}

void c2c_1d(cplx* data, int len, int sign) {
    fftw_plan p = plan_1d(len, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace sglab::fft
