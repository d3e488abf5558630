#ifndef RM_SLP_HPP
#define RM_SLP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"
#include "upoly.hpp"

namespace rm {

class LinearChange;

// Straight-line program over a commutative ring: operations +,-,* only, no
// branches or divisions. Operand indices <= 0 refer to inputs (input j, for
// j = 1..N, has index j - N); indices >= 1 refer to earlier instructions.
// Constants are residues in Q[T]; programs over Q only use degree-0 ones.
class Slp {
  public:
    enum class Op { Const, Add, Sub, Mul, Scale };

    struct Instr {
        Op op;
        int a = 0, b = 0; // operand indices
        UniPoly c;        // constant (Const, Scale)
    };

    Slp() = default;
    Slp(int arity, std::vector<Instr> instrs, std::vector<int> outputs);

    int arity() const { return arity_; }
    std::size_t length() const { return instrs_.size(); }
    const std::vector<Instr>& instructions() const { return instrs_; }
    const std::vector<int>& outputs() const { return outputs_; }
    int n_outputs() const { return static_cast<int>(outputs_.size()); }

    // Builder interface: returns the index of the appended instruction.
    int push_const(const UniPoly& c);
    int push_const(const Rat& c) { return push_const(UniPoly::constant(c)); }
    int push(Op op, int a, int b);
    int push_scale(const Rat& c, int a) { return push_scale(UniPoly::constant(c), a); }
    int push_scale(const UniPoly& c, int a);
    void set_outputs(std::vector<int> outs);
    static int input_index(int j, int arity) { return j - arity; } // j in 1..N

    // Per-output formal degree bounds (deg of a constant = 0, input = 1).
    std::vector<long> degree_bounds() const;

    template <class F>
    std::vector<typename F::Elem> eval(const F& f,
                                       const std::vector<typename F::Elem>& inputs) const {
        if ((int)inputs.size() != arity_)
            throw ArityMismatch("slp evaluation: expected " + std::to_string(arity_) +
                                " inputs, got " + std::to_string(inputs.size()));
        std::vector<typename F::Elem> vals(instrs_.size(), f.zero());
        auto at = [&](int idx) -> const typename F::Elem& {
            return idx <= 0 ? inputs[idx + arity_ - 1] : vals[idx - 1];
        };
        for (std::size_t i = 0; i < instrs_.size(); ++i) {
            const Instr& ins = instrs_[i];
            switch (ins.op) {
                case Op::Const: vals[i] = f.from_residue(ins.c); break;
                case Op::Add: vals[i] = f.add(at(ins.a), at(ins.b)); break;
                case Op::Sub: vals[i] = f.sub(at(ins.a), at(ins.b)); break;
                case Op::Mul: vals[i] = f.mul(at(ins.a), at(ins.b)); break;
                case Op::Scale: vals[i] = f.mul(f.from_residue(ins.c), at(ins.a)); break;
            }
        }
        std::vector<typename F::Elem> out;
        out.reserve(outputs_.size());
        for (int o : outputs_) out.push_back(at(o));
        return out;
    }

    std::vector<Rat> eval_q(const std::vector<Rat>& inputs) const {
        return eval(QField{}, inputs);
    }

  private:
    void check_index(int idx) const;
    int arity_ = 0;
    std::vector<Instr> instrs_;
    std::vector<int> outputs_;
};

// Invertible change of variables acting on the first `block` coordinates
// and fixing the first `e` of those (GL(block, e)); identity elsewhere.
class LinearChange {
  public:
    LinearChange() = default;
    LinearChange(int size, int fixed_prefix, std::vector<std::vector<Rat>> matrix);
    static LinearChange identity(int size);

    int size() const { return n_; }
    int fixed_prefix() const { return e_; }
    const std::vector<std::vector<Rat>>& matrix() const { return m_; }
    const std::vector<std::vector<Rat>>& inverse() const { return minv_; }

    LinearChange inverse_change() const { return LinearChange(n_, e_, minv_); }

    // y = M x
    std::vector<Rat> apply(const std::vector<Rat>& x) const;
    std::vector<Rat> apply_inverse(const std::vector<Rat>& x) const;

  private:
    int n_ = 0, e_ = 0;
    std::vector<std::vector<Rat>> m_, minv_;
};

// Invert an exact rational matrix; throws MathError when singular.
std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> m);

// Reverse-mode differentiation: a program computing the outputs of s
// followed by all first partials, row-major by output.
Slp slp_jacobian(const Slp& s);

// Replace inputs 1..e by constants (residues), producing a program with
// arity N-e over the remaining variables.
Slp slp_substitute_prefix(const Slp& s, const std::vector<UniPoly>& values);

// Program computing F(A x); the change acts on the first A.size() inputs.
Slp slp_change_vars(const Slp& s, const LinearChange& a);

// Appends a division-free Berkowitz determinant of the minor of the
// Jacobian block selected by rows/cols. jac_layout: the Jacobian entries of
// output i, variable j sit at output position jac_offset + i*nvars + j.
Slp slp_minor(const Slp& jac_program, int jac_offset, int nvars,
              const std::vector<int>& rows, const std::vector<int>& cols);

// (F, [L_1..L_P] * jac(F, cut), u.L - 1) in N + P variables.
Slp slp_augment_lagrange(const Slp& s, int cut, const std::vector<Rat>& u);

// Restrict/extend outputs.
Slp slp_select_outputs(const Slp& s, const std::vector<int>& which);
// Concatenate programs with identical arity (outputs of a then b).
Slp slp_concat(const Slp& a, const Slp& b);

// Text format, one instruction per line (see README).
std::string slp_to_text(const Slp& s);
Slp slp_from_text(const std::string& text);

// Infix parser: "vars x,y; x^2 + y^2 - 1; ..." -> names + program with one
// output per polynomial; accepts the f:/g: tagged form used by solve-fg.
struct ParsedSystem {
    std::vector<std::string> vars;
    Slp system;           // all f-polynomials
    Slp aux;              // g-polynomials (empty program when none)
    bool has_aux = false;
};
ParsedSystem parse_system(const std::string& text);

} // namespace rm

#endif
