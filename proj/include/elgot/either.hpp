#pragma once

#include <utility>
#include <variant>

namespace elgot {

/// Binary sum with positional injections. Unlike a bare std::variant this
/// stays usable when both components have the same type, which happens all
/// the time for loop bodies X -> A + X with A == X.
template <class L, class R>
class Either {
 public:
  using left_type = L;
  using right_type = R;

  static Either left(L v) { return Either(std::variant<L, R>(std::in_place_index<0>, std::move(v))); }
  static Either right(R v) { return Either(std::variant<L, R>(std::in_place_index<1>, std::move(v))); }

  bool is_left() const { return v_.index() == 0; }
  bool is_right() const { return v_.index() == 1; }

  const L& left() const { return std::get<0>(v_); }
  const R& right() const { return std::get<1>(v_); }

  friend bool operator==(const Either& a, const Either& b) {
    if (a.v_.index() != b.v_.index()) return false;
    return a.is_left() ? a.left() == b.left() : a.right() == b.right();
  }

 private:
  explicit Either(std::variant<L, R> v) : v_(std::move(v)) {}
  std::variant<L, R> v_;
};

}  // namespace elgot
