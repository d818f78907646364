#include <cmath>
#include <map>
#include <mutex>

#include <fftw3.h>

#include "spirallog/error.hpp"
#include "spirallog/series.hpp"

namespace spirallog {

namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
class PlanCache {
public:
    ~PlanCache()
    {
        for (auto &[n, p] : plans_)
            fftw_destroy_plan(p);
    }

    fftw_plan get(int n)
    {
        std::lock_guard lock(mutex_);
        if (auto it = plans_.find(n); it != plans_.end())
            return it->second;
        std::vector<Complex> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
        fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex *>(in.data()),
                                       reinterpret_cast<fftw_complex *>(out.data()), FFTW_BACKWARD,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(n, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<int, fftw_plan> plans_;
};

PlanCache &plan_cache()
{
    static PlanCache cache;
    return cache;
}

} // namespace

std::vector<Complex> evaluate_ring(const TruncatedSeries &a, double r, int count)
{
    if (count < 1)
        throw Error(ErrorCode::InvalidArgument, "evaluate_ring: count must be positive");
    if (!(r >= 0.0) || !std::isfinite(r))
        throw Error(ErrorCode::InvalidArgument, "evaluate_ring: radius must be finite and non-negative");
    std::vector<Complex> folded(static_cast<std::size_t>(count));
    double rk = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        folded[static_cast<std::size_t>(k % count)] += a[k] * rk;
        rk *= r;
    }
    std::vector<Complex> values(static_cast<std::size_t>(count));
    // Backward transform: values_j = sum_k folded_k exp(+2 pi i j k / count).
    fftw_execute_dft(plan_cache().get(count), reinterpret_cast<fftw_complex *>(folded.data()),
                     reinterpret_cast<fftw_complex *>(values.data()));
    return values;
}

} // namespace spirallog
