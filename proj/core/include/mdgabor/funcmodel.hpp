// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mdg {

using complex = std::complex<double>;

enum class Domain { RealLine, PositiveHalfLine };

const char* to_string(Domain d) noexcept;

// ---------------------------------------------------------------------------
// The warp phi: R -> R+, piecewise linear through (k, b^k).

/// floor(log_b y) for y > 0, snapped to the nearest integer when log_b y is
/// within 1e-12 of it so that b-adic points land in the right bracket.
std::int64_t log_floor(double y, double b);

/// phi(x) = b^k ((b - 1)(x - k) + 1) with k = floor(x).
double phi(double x, double b);

/// Inverse of phi; throws DomainError for y <= 0.
double phi_inv(double y, double b);

/// phi'(x) = b^floor(x) (b - 1). Right-continuous at the integers.
double phi_deriv(double x, double b);

/// gamma_m(x) = exp(2 pi i m x~ / (b - 1)) with x~ = x b^-floor(log_b x) in
/// [1, b). b-dilation periodic; throws DomainError for x <= 0.
complex gamma(std::int64_t m, double b, double x);

// ---------------------------------------------------------------------------

/// Samples on a strictly increasing abscissa, linearly interpolated and
/// zero outside [x.front(), x.back()].
class SampledTable {
 public:
  SampledTable(std::vector<double> x, std::vector<complex> values);

  complex operator()(double x) const;

  std::span<const double> abscissae() const noexcept { return x_; }
  std::span<const complex> values() const noexcept { return values_; }

 private:
  std::vector<double> x_;
  std::vector<complex> values_;
};

/// CSV with header `x,re,im`, 17 significant digits.
void write_table_csv(const SampledTable& table, const std::string& path);
SampledTable read_table_csv(const std::string& path);

// ---------------------------------------------------------------------------

struct Gaussian {
  double center;
  double width;
};
struct CharInterval {
  double lo;
  double hi;
};
struct OneSidedExp {
  double rate;
};
struct Hat {
  double center;
  double halfwidth;
};
struct Table {
  std::shared_ptr<const SampledTable> table;
  std::string source;  // file path the table was read from, if any
};

struct ScalarMulOp {
  complex c;
};
struct DilateOp {
  double a;
};
struct TranslateOp {
  double c;
};
struct ModulateOp {
  double nu;
};
struct MdModulateOp {
  std::int64_t m;
  double b;
};

using Operator = std::variant<ScalarMulOp, DilateOp, TranslateOp, ModulateOp, MdModulateOp>;

class FuncExpr;

struct ExprNode;

/// Immutable, domain-tagged function expression. Operators compose lazily
/// and the tree is only evaluated pointwise, so chains such as
/// D_phi D_{a^r} M_gamma never resample.
///
/// Half-line expressions evaluate to zero for x <= 0.
class FuncExpr {
 public:
  // Primitives. The Gaussian is L2-normalised on R:
  // (2 / w^2)^(1/4) exp(-pi (x - c)^2 / w^2). one_sided_exp is
  // sqrt(2 rate) exp(-rate x) on x >= 0. char_interval is the indicator of
  // [lo, hi) and hat is max(0, 1 - |x - c| / halfwidth).
  static FuncExpr gaussian(double center, double width, Domain domain = Domain::RealLine);
  static FuncExpr char_interval(double lo, double hi, Domain domain = Domain::RealLine);
  static FuncExpr one_sided_exp(double rate, Domain domain = Domain::PositiveHalfLine);
  static FuncExpr hat(double center, double halfwidth, Domain domain = Domain::RealLine);
  static FuncExpr sampled(std::shared_ptr<const SampledTable> table, Domain domain,
                          std::string source = {});

  static FuncExpr sum(std::span<const FuncExpr> terms);

  Domain domain() const noexcept;

  complex operator()(double x) const;
  std::vector<complex> sample(std::span<const double> xs) const;

  FuncExpr scaled(complex c) const;
  /// D_a f(x) = a^(1/2) f(a x).
  FuncExpr dilated(double a) const;
  /// T_c f(x) = f(x - c); RealLine only.
  FuncExpr translated(double c) const;
  /// M_nu f(x) = exp(2 pi i nu x) f(x).
  FuncExpr modulated(double nu) const;
  /// M_{gamma_m} f; PositiveHalfLine only.
  FuncExpr md_modulated(std::int64_t m, double b) const;

  const ExprNode& node() const noexcept { return *node_; }

  friend FuncExpr operator+(const FuncExpr& lhs, const FuncExpr& rhs);

 private:
  explicit FuncExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  friend FuncExpr warp_op(const FuncExpr&, double);
  friend FuncExpr unwarp_op(const FuncExpr&, double);

  std::shared_ptr<const ExprNode> node_;
};

struct ScalarMulNode {
  complex c;
  FuncExpr child;
};
struct SumNode {
  std::vector<FuncExpr> terms;
};
struct DilateNode {
  double a;
  FuncExpr child;
};
struct TranslateNode {
  double c;
  FuncExpr child;
};
struct ModulateNode {
  double nu;
  FuncExpr child;
};
struct MdModulateNode {
  std::int64_t m;
  double b;
  FuncExpr child;
};
struct WarpNode {
  double b;
  FuncExpr child;
};
struct UnwarpNode {
  double b;
  FuncExpr child;
};

struct ExprNode {
  using Kind = std::variant<Gaussian, CharInterval, OneSidedExp, Hat, Table, ScalarMulNode,
                            SumNode, DilateNode, TranslateNode, ModulateNode, MdModulateNode,
                            WarpNode, UnwarpNode>;
  Kind kind;
  Domain domain;
};

/// D_phi h = sqrt(phi') (h o phi): PositiveHalfLine -> RealLine.
FuncExpr warp_op(const FuncExpr& h, double b);

/// D_phi^-1 g = (g o phi^-1) / sqrt(phi' o phi^-1): RealLine -> PositiveHalfLine.
FuncExpr unwarp_op(const FuncExpr& g, double b);

FuncExpr apply_operator(const FuncExpr& expr, const Operator& op);

}  // namespace mdg
