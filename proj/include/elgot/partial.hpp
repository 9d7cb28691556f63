#pragma once

#include <optional>
#include <type_traits>
#include <utility>

namespace elgot {

/// Extensional result of a computation: a value or divergence.
template <class X>
class Partial {
 public:
  using value_type = X;

  static Partial value(X x) { return Partial(std::optional<X>(std::move(x))); }
  static Partial bottom() { return Partial(std::nullopt); }

  bool defined() const { return v_.has_value(); }
  const X& get() const { return *v_; }

  friend bool operator==(const Partial& a, const Partial& b) {
    if (a.defined() != b.defined()) return false;
    return !a.defined() || a.get() == b.get();
  }

 private:
  explicit Partial(std::optional<X> v) : v_(std::move(v)) {}
  std::optional<X> v_;
};

template <class X>
Partial<X> eta(X x) {
  return Partial<X>::value(std::move(x));
}

template <class X, class F>
auto bind(const Partial<X>& p, F f) {
  using PY = std::invoke_result_t<F, X>;
  if (!p.defined()) return PY::bottom();
  return f(p.get());
}

template <class X, class F>
auto map(const Partial<X>& p, F f) {
  using Y = std::invoke_result_t<F, X>;
  if (!p.defined()) return Partial<Y>::bottom();
  return Partial<Y>::value(f(p.get()));
}

template <class X>
Partial<X> mu(const Partial<Partial<X>>& pp) {
  if (!pp.defined()) return Partial<X>::bottom();
  return pp.get();
}

template <class X, class Y>
Partial<std::pair<X, Y>> strength(const X& x, const Partial<Y>& p) {
  using P = std::pair<X, Y>;
  if (!p.defined()) return Partial<P>::bottom();
  return Partial<P>::value(P(x, p.get()));
}

template <class X, class Y>
Partial<std::pair<X, Y>> costrength(const Partial<X>& p, const Y& y) {
  using P = std::pair<X, Y>;
  if (!p.defined()) return Partial<P>::bottom();
  return Partial<P>::value(P(p.get(), y));
}

/// The restriction preorder on single results: bottom is below everything,
/// values are comparable only to themselves.
template <class X>
bool leq(const Partial<X>& a, const Partial<X>& b) {
  return !a.defined() || a == b;
}

}  // namespace elgot
