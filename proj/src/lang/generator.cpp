#include "elgot/lang/generator.hpp"

#include <random>
#include <vector>

namespace elgot::lang {

namespace {

class Gen {
 public:
  Gen(std::uint32_t seed, const GenParams& params) : rng_(seed), params_(params) {}

  Program run() {
    Program p;
    int nvars = pick(1, params_.max_vars);
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < nvars && i < 3; ++i) {
      p.decls.push_back(Decl{names[i], pick(1, params_.max_width), SourceLoc{1, 1}});
      vars_.push_back(names[i]);
    }
    p.body = gen_stmt(params_.max_depth);
    return p;
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  ExprPtr gen_int_expr(int depth) {
    SourceLoc l{1, 1};
    if (depth <= 0 || pick(0, 2) == 0) {
      if (pick(0, 1) == 0) return Expr::int_lit(pick(0, 7), l);
      return Expr::variable(vars_[static_cast<size_t>(pick(0, static_cast<int>(vars_.size()) - 1))], l);
    }
    BinOp op = std::vector<BinOp>{BinOp::Add, BinOp::Sub, BinOp::Mul}[static_cast<size_t>(pick(0, 2))];
    return Expr::binary(op, gen_int_expr(depth - 1), gen_int_expr(depth - 1), l);
  }

  // Guards are comparisons between small integer expressions.
  ExprPtr gen_guard() {
    SourceLoc l{1, 1};
    BinOp op = std::vector<BinOp>{BinOp::Lt, BinOp::Le, BinOp::Eq}[static_cast<size_t>(pick(0, 2))];
    return Expr::binary(op, gen_int_expr(1), gen_int_expr(1), l);
  }

  StmtPtr gen_assign() {
    SourceLoc l{1, 1};
    return Stmt::assign(vars_[static_cast<size_t>(pick(0, static_cast<int>(vars_.size()) - 1))],
                        gen_int_expr(2), l);
  }

  StmtPtr gen_stmt(int depth) {
    SourceLoc l{1, 1};
    if (depth <= 0) return pick(0, 2) == 0 ? Stmt::skip(l) : gen_assign();
    switch (pick(0, 9)) {
      case 0: return Stmt::skip(l);
      case 1:
      case 2:
      case 3: return gen_assign();
      case 4:
      case 5: return Stmt::seq(gen_stmt(depth - 1), gen_stmt(depth - 1), l);
      case 6:
      case 7: return Stmt::if_(gen_guard(), gen_stmt(depth - 1), gen_stmt(depth - 1), l);
      default: return Stmt::while_(gen_guard(), gen_stmt(depth - 1), l);
    }
  }

  std::mt19937 rng_;
  GenParams params_;
  std::vector<std::string> vars_;
};

}  // namespace

Program generate_program(std::uint32_t seed, const GenParams& params) {
  return Gen(seed, params).run();
}

}  // namespace elgot::lang
