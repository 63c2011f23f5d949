#include "qwoa/nelder_mead.hpp"

#include "qwoa/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qwoa {

namespace {

struct BudgetExhausted {};

class Evaluator {
public:
    Evaluator(const std::function<double(const std::vector<double>&)>& f, int budget)
        : f_(f), remaining_(budget) {}

    double operator()(const std::vector<double>& x) {
        if (remaining_ <= 0) throw BudgetExhausted{};
        --remaining_;
        ++used_;
        double v = f_(x);
        if (used_ == 1 || v < best_value_) {
            best_value_ = v;
            best_point_ = x;
        }
        return v;
    }

    int used() const { return used_; }
    const std::vector<double>& best_point() const { return best_point_; }
    double best_value() const { return best_value_; }

private:
    const std::function<double(const std::vector<double>&)>& f_;
    int remaining_;
    int used_ = 0;
    double best_value_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_point_;
};

} // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& options) {
    if (options.max_evaluations < 1)
        throw ParameterError("nelder_mead: evaluation budget must be >= 1");

    const int n = static_cast<int>(start.size());
    Evaluator eval(f, options.max_evaluations);

    try {
        eval(start);
        if (n == 0) throw BudgetExhausted{}; // nothing to vary

        std::vector<std::vector<double>> x(n + 1, start);
        std::vector<double> fx(n + 1);
        fx[0] = eval.best_value();
        for (int i = 0; i < n; ++i) {
            x[i + 1][i] += options.initial_step;
            fx[i + 1] = eval(x[i + 1]);
        }

        while (true) {
            std::vector<int> idx(n + 1);
            for (int i = 0; i <= n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
            std::vector<std::vector<double>> xs(n + 1);
            std::vector<double> fs(n + 1);
            for (int i = 0; i <= n; ++i) { xs[i] = x[idx[i]]; fs[i] = fx[idx[i]]; }
            x.swap(xs);
            fx.swap(fs);

            if (std::abs(fx[n] - fx[0]) <= options.spread_tolerance) break;

            std::vector<double> centroid(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) centroid[j] += x[i][j] / n;

            auto blend = [&](const std::vector<double>& base, double coeff) {
                std::vector<double> p(n);
                for (int j = 0; j < n; ++j)
                    p[j] = centroid[j] + coeff * (base[j] - centroid[j]);
                return p;
            };

            std::vector<double> reflected = blend(x[n], -options.alpha);
            double fr = eval(reflected);
            if (fr < fx[0]) {
                std::vector<double> expanded = blend(x[n], -options.alpha * options.gamma);
                double fe = eval(expanded);
                if (fe < fr) { x[n] = expanded; fx[n] = fe; }
                else { x[n] = reflected; fx[n] = fr; }
            } else if (fr < fx[n - 1]) {
                x[n] = reflected; fx[n] = fr;
            } else {
                bool outside = fr < fx[n];
                std::vector<double> contracted =
                    outside ? blend(reflected, options.rho) : blend(x[n], options.rho);
                double fc = eval(contracted);
                if (fc < std::min(fr, fx[n])) {
                    x[n] = contracted; fx[n] = fc;
                } else {
                    for (int i = 1; i <= n; ++i) {
                        for (int j = 0; j < n; ++j)
                            x[i][j] = x[0][j] + options.sigma * (x[i][j] - x[0][j]);
                        fx[i] = eval(x[i]);
                    }
                }
            }
        }
    } catch (const BudgetExhausted&) {
        // fall through with the best point seen so far
    }

    NelderMeadResult result;
    result.best_point = eval.best_point();
    result.best_value = eval.best_value();
    result.evaluations = eval.used();
    return result;
}

} // namespace qwoa
