// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/minimizer.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

// GSL aborts on errors by default; we inspect return codes instead.
void disable_gsl_abort() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct Context {
  const Objective* f;
  double step;
};

std::span<const double> view(const gsl_vector* v) { return {v->data, v->size}; }

double eval_f(const gsl_vector* x, void* raw) {
  auto* ctx = static_cast<Context*>(raw);
  const double value = (*ctx->f)(view(x));
  return std::isfinite(value) ? value : GSL_POSINF;
}

void eval_df(const gsl_vector* x, void* raw, gsl_vector* g) {
  auto* ctx = static_cast<Context*>(raw);
  const auto grad = central_difference_gradient(*ctx->f, view(x), ctx->step);
  for (std::size_t i = 0; i < grad.size(); ++i) gsl_vector_set(g, i, grad[i]);
}

void eval_fdf(const gsl_vector* x, void* raw, double* f, gsl_vector* g) {
  *f = eval_f(x, raw);
  eval_df(x, raw, g);
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;

VectorPtr to_gsl(const std::vector<double>& x) {
  VectorPtr v(gsl_vector_alloc(x.size()));
  std::copy(x.begin(), x.end(), v->data);
  return v;
}

double inf_norm(const gsl_vector* v) {
  double m = 0.0;
  for (std::size_t i = 0; i < v->size; ++i) m = std::max(m, std::abs(gsl_vector_get(v, i)));
  return m;
}

void check_start(const std::vector<double>& x0) {
  if (x0.empty()) raise(ErrorKind::InvalidArgument, "minimizer needs at least one parameter");
}

}  // namespace

std::vector<double> central_difference_gradient(const Objective& f, std::span<const double> x,
                                                double step) {
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = point[i];
    point[i] = xi + step;
    const double up = f(point);
    point[i] = xi - step;
    const double down = f(point);
    point[i] = xi;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

MinimizerResult minimize_bfgs(const Objective& f, std::vector<double> x0,
                              const MinimizerOptions& options) {
  check_start(x0);
  disable_gsl_abort();
  Context ctx{&f, options.gradient_step};
  gsl_multimin_function_fdf fdf{&eval_f, &eval_df, &eval_fdf, x0.size(), &ctx};

  std::unique_ptr<gsl_multimin_fdfminimizer, decltype(&gsl_multimin_fdfminimizer_free)> solver(
      gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, x0.size()),
      &gsl_multimin_fdfminimizer_free);
  const VectorPtr start = to_gsl(x0);
  gsl_multimin_fdfminimizer_set(solver.get(), &fdf, start.get(), options.first_step,
                                options.line_search_tolerance);

  MinimizerResult result;
  result.status = "max-iterations";
  double previous = solver->f;
  if (inf_norm(solver->gradient) < options.gradient_tolerance) {
    result.converged = true;
    result.status = "gradient";
  }
  while (!result.converged && result.iterations < options.max_iterations) {
    ++result.iterations;
    const int status = gsl_multimin_fdfminimizer_iterate(solver.get());
    if (status == GSL_ENOPROG) {
      // The line search stalled; this counts as converged only if f is flat.
      result.converged = std::abs(solver->f - previous) < options.f_tolerance;
      result.status = "no-progress";
      break;
    }
    if (status != GSL_SUCCESS) {
      result.status = gsl_strerror(status);
      break;
    }
    if (inf_norm(solver->gradient) < options.gradient_tolerance) {
      result.converged = true;
      result.status = "gradient";
    } else if (std::abs(solver->f - previous) < options.f_tolerance) {
      result.converged = true;
      result.status = "f-tolerance";
    }
    previous = solver->f;
  }
  result.value = solver->f;
  result.x.assign(solver->x->data, solver->x->data + solver->x->size);
  return result;
}

MinimizerResult minimize_simplex(const Objective& f, std::vector<double> x0,
                                 const MinimizerOptions& options) {
  check_start(x0);
  disable_gsl_abort();
  Context ctx{&f, options.gradient_step};
  gsl_multimin_function fn{&eval_f, x0.size(), &ctx};

  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, x0.size()),
      &gsl_multimin_fminimizer_free);
  const VectorPtr start = to_gsl(x0);
  VectorPtr steps(gsl_vector_alloc(x0.size()));
  gsl_vector_set_all(steps.get(), options.simplex_step);
  gsl_multimin_fminimizer_set(solver.get(), &fn, start.get(), steps.get());

  MinimizerResult result;
  result.status = "max-iterations";
  while (result.iterations < options.max_iterations) {
    ++result.iterations;
    const int status = gsl_multimin_fminimizer_iterate(solver.get());
    if (status != GSL_SUCCESS) {
      result.status = gsl_strerror(status);
      break;
    }
    const double size = gsl_multimin_fminimizer_size(solver.get());
    if (gsl_multimin_test_size(size, options.simplex_size_tolerance) == GSL_SUCCESS) {
      result.converged = true;
      result.status = "simplex-size";
      break;
    }
  }
  result.value = solver->fval;
  result.x.assign(solver->x->data, solver->x->data + solver->x->size);
  return result;
}

}  // namespace gibbsxy
