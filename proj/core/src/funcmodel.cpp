// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mdgabor/funcmodel.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "mdgabor/error.hpp"

namespace mdg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLogSnap = 1e-12;

// exp(2 pi i t), with t reduced to [-1/2, 1/2] first so large arguments
// keep full relative phase accuracy.
complex unit_phase(double t) {
  const double frac = t - std::nearbyint(t);
  return std::polar(1.0, kTwoPi * frac);
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
  require_finite(v, what);
  if (!(v > 0.0)) throw Error(ErrorCode::OutOfRange, std::string(what) + " must be positive");
}

void require_base(double b) {
  require_finite(b, "b");
  if (!(b > 1.0)) throw Error(ErrorCode::OutOfRange, "b must exceed 1");
}

complex eval(const ExprNode& node, double x);

complex eval_expr(const FuncExpr& f, double x) { return eval(f.node(), x); }

complex eval(const ExprNode& node, double x) {
  if (node.domain == Domain::PositiveHalfLine && !(x > 0.0)) return 0.0;
  return std::visit(
      [x](const auto& n) -> complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          const double z = (x - n.center) / n.width;
          return std::pow(2.0 / (n.width * n.width), 0.25) * std::exp(-std::numbers::pi * z * z);
        } else if constexpr (std::is_same_v<T, CharInterval>) {
          return (x >= n.lo && x < n.hi) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, OneSidedExp>) {
          return x >= 0.0 ? std::sqrt(2.0 * n.rate) * std::exp(-n.rate * x) : 0.0;
        } else if constexpr (std::is_same_v<T, Hat>) {
          const double t = 1.0 - std::abs(x - n.center) / n.halfwidth;
          return t > 0.0 ? t : 0.0;
        } else if constexpr (std::is_same_v<T, Table>) {
          return (*n.table)(x);
        } else if constexpr (std::is_same_v<T, ScalarMulNode>) {
          return n.c * eval_expr(n.child, x);
        } else if constexpr (std::is_same_v<T, SumNode>) {
          complex acc = 0.0;
          for (const auto& term : n.terms) acc += eval_expr(term, x);
          return acc;
        } else if constexpr (std::is_same_v<T, DilateNode>) {
          return std::sqrt(n.a) * eval_expr(n.child, n.a * x);
        } else if constexpr (std::is_same_v<T, TranslateNode>) {
          return eval_expr(n.child, x - n.c);
        } else if constexpr (std::is_same_v<T, ModulateNode>) {
          return unit_phase(n.nu * x) * eval_expr(n.child, x);
        } else if constexpr (std::is_same_v<T, MdModulateNode>) {
          return gamma(n.m, n.b, x) * eval_expr(n.child, x);
        } else if constexpr (std::is_same_v<T, WarpNode>) {
          return std::sqrt(phi_deriv(x, n.b)) * eval_expr(n.child, phi(x, n.b));
        } else {
          static_assert(std::is_same_v<T, UnwarpNode>);
          const double t = phi_inv(x, n.b);
          return eval_expr(n.child, t) / std::sqrt(phi_deriv(t, n.b));
        }
      },
      node.kind);
}

}  // namespace

const char* to_string(Domain d) noexcept {
  return d == Domain::RealLine ? "RealLine" : "PositiveHalfLine";
}

std::int64_t log_floor(double y, double b) {
  const double t = std::log(y) / std::log(b);
  const double nearest = std::nearbyint(t);
  if (std::abs(t - nearest) <= kLogSnap) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::floor(t));
}

double phi(double x, double b) {
  const double k = std::floor(x);
  return std::pow(b, k) * ((b - 1.0) * (x - k) + 1.0);
}

double phi_inv(double y, double b) {
  if (!(y > 0.0)) throw Error(ErrorCode::DomainError, "phi_inv requires y > 0");
  const auto k = log_floor(y, b);
  return static_cast<double>(k) + (y * std::pow(b, static_cast<double>(-k)) - 1.0) / (b - 1.0);
}

double phi_deriv(double x, double b) { return std::pow(b, std::floor(x)) * (b - 1.0); }

complex gamma(std::int64_t m, double b, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "gamma_m is defined on x > 0 only");
  if (m == 0) return 1.0;
  const auto k = log_floor(x, b);
  const double reduced = x * std::pow(b, static_cast<double>(-k));
  return unit_phase(static_cast<double>(m) * reduced / (b - 1.0));
}

// ---------------------------------------------------------------------------

FuncExpr FuncExpr::gaussian(double center, double width, Domain domain) {
  require_finite(center, "gaussian center");
  require_positive(width, "gaussian width");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{Gaussian{center, width}, domain}));
}

FuncExpr FuncExpr::char_interval(double lo, double hi, Domain domain) {
  require_finite(lo, "interval lo");
  require_finite(hi, "interval hi");
  if (!(hi > lo)) throw Error(ErrorCode::OutOfRange, "char_interval requires hi > lo");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{CharInterval{lo, hi}, domain}));
}

FuncExpr FuncExpr::one_sided_exp(double rate, Domain domain) {
  require_positive(rate, "one_sided_exp rate");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{OneSidedExp{rate}, domain}));
}

FuncExpr FuncExpr::hat(double center, double halfwidth, Domain domain) {
  require_finite(center, "hat center");
  require_positive(halfwidth, "hat halfwidth");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{Hat{center, halfwidth}, domain}));
}

FuncExpr FuncExpr::sampled(std::shared_ptr<const SampledTable> table, Domain domain,
                           std::string source) {
  if (!table) throw Error(ErrorCode::OutOfRange, "sampled table is null");
  return FuncExpr(
      std::make_shared<const ExprNode>(ExprNode{Table{std::move(table), std::move(source)}, domain}));
}

FuncExpr FuncExpr::sum(std::span<const FuncExpr> terms) {
  if (terms.empty()) throw Error(ErrorCode::OutOfRange, "sum needs at least one term");
  const Domain d = terms.front().domain();
  for (const auto& t : terms) {
    if (t.domain() != d) throw Error(ErrorCode::DomainMismatch, "sum terms live on different domains");
  }
  return FuncExpr(std::make_shared<const ExprNode>(
      ExprNode{SumNode{std::vector<FuncExpr>(terms.begin(), terms.end())}, d}));
}

FuncExpr operator+(const FuncExpr& lhs, const FuncExpr& rhs) {
  const FuncExpr terms[] = {lhs, rhs};
  return FuncExpr::sum(terms);
}

Domain FuncExpr::domain() const noexcept { return node_->domain; }

complex FuncExpr::operator()(double x) const { return eval(*node_, x); }

std::vector<complex> FuncExpr::sample(std::span<const double> xs) const {
  std::vector<complex> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = eval(*node_, xs[i]);
  return out;
}

FuncExpr FuncExpr::scaled(complex c) const {
  require_finite(c.real(), "scalar");
  require_finite(c.imag(), "scalar");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{ScalarMulNode{c, *this}, domain()}));
}

FuncExpr FuncExpr::dilated(double a) const {
  require_positive(a, "dilation");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{DilateNode{a, *this}, domain()}));
}

FuncExpr FuncExpr::translated(double c) const {
  require_finite(c, "translation");
  if (domain() != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch, "translation is undefined on the half-line");
  }
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{TranslateNode{c, *this}, domain()}));
}

FuncExpr FuncExpr::modulated(double nu) const {
  require_finite(nu, "modulation");
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{ModulateNode{nu, *this}, domain()}));
}

FuncExpr FuncExpr::md_modulated(std::int64_t m, double b) const {
  require_base(b);
  if (domain() != Domain::PositiveHalfLine) {
    throw Error(ErrorCode::DomainMismatch, "gamma_m modulation lives on the half-line");
  }
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{MdModulateNode{m, b, *this}, domain()}));
}

FuncExpr warp_op(const FuncExpr& h, double b) {
  require_base(b);
  if (h.domain() != Domain::PositiveHalfLine) {
    throw Error(ErrorCode::DomainMismatch, "warp_op expects a half-line function");
  }
  return FuncExpr(std::make_shared<const ExprNode>(ExprNode{WarpNode{b, h}, Domain::RealLine}));
}

FuncExpr unwarp_op(const FuncExpr& g, double b) {
  require_base(b);
  if (g.domain() != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch, "unwarp_op expects a real-line function");
  }
  return FuncExpr(
      std::make_shared<const ExprNode>(ExprNode{UnwarpNode{b, g}, Domain::PositiveHalfLine}));
}

FuncExpr apply_operator(const FuncExpr& expr, const Operator& op) {
  return std::visit(
      [&expr](const auto& o) -> FuncExpr {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ScalarMulOp>) return expr.scaled(o.c);
        else if constexpr (std::is_same_v<T, DilateOp>) return expr.dilated(o.a);
        else if constexpr (std::is_same_v<T, TranslateOp>) return expr.translated(o.c);
        else if constexpr (std::is_same_v<T, ModulateOp>) return expr.modulated(o.nu);
        else return expr.md_modulated(o.m, o.b);
      },
      op);
}

}  // namespace mdg
