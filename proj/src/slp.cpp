#include "slp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <limits>
#include <sstream>

namespace rm {

Slp::Slp(int arity, std::vector<Instr> instrs, std::vector<int> outputs)
    : arity_(arity), instrs_(std::move(instrs)), outputs_(std::move(outputs)) {
    for (std::size_t i = 0; i < instrs_.size(); ++i) {
        const Instr& ins = instrs_[i];
        if (ins.op == Op::Add || ins.op == Op::Sub || ins.op == Op::Mul) {
            if (ins.a > (int)i || ins.b > (int)i || ins.a <= -arity_ - 1 || ins.b <= -arity_ - 1)
                throw ArityMismatch("slp operand out of range");
        } else if (ins.op == Op::Scale) {
            if (ins.a > (int)i || ins.a <= -arity_ - 1)
                throw ArityMismatch("slp operand out of range");
        }
    }
}

void Slp::check_index(int idx) const {
    if (idx > (int)instrs_.size() || idx <= -arity_ - 1)
        throw ArityMismatch("slp operand out of range");
}

int Slp::push_const(const UniPoly& c) {
    instrs_.push_back({Op::Const, 0, 0, c});
    return (int)instrs_.size();
}

int Slp::push(Op op, int a, int b) {
    check_index(a);
    check_index(b);
    instrs_.push_back({op, a, b, {}});
    return (int)instrs_.size();
}

int Slp::push_scale(const UniPoly& c, int a) {
    check_index(a);
    instrs_.push_back({Op::Scale, a, 0, c});
    return (int)instrs_.size();
}

void Slp::set_outputs(std::vector<int> outs) {
    for (int o : outs) check_index(o);
    if (outs.empty()) throw ArityMismatch("slp with no outputs");
    outputs_ = std::move(outs);
}

std::vector<long> Slp::degree_bounds() const {
    std::vector<long> deg(instrs_.size(), 0);
    auto at = [&](int idx) -> long { return idx <= 0 ? 1 : deg[idx - 1]; };
    for (std::size_t i = 0; i < instrs_.size(); ++i) {
        const Instr& ins = instrs_[i];
        switch (ins.op) {
            case Op::Const: deg[i] = 0; break;
            case Op::Add:
            case Op::Sub: deg[i] = std::max(at(ins.a), at(ins.b)); break;
            case Op::Mul: deg[i] = at(ins.a) + at(ins.b); break;
            case Op::Scale: deg[i] = at(ins.a); break;
        }
    }
    std::vector<long> out;
    out.reserve(outputs_.size());
    for (int o : outputs_) out.push_back(at(o));
    return out;
}

// --- program stitching -----------------------------------------------------

namespace {

// Sentinel for "no accumulated operand yet": index 0 is a valid input slot.
constexpr int kNone = std::numeric_limits<int>::min();

// Appends src's instructions to dst, with src input j (1..arity) realized by
// dst index input_map[j-1]. Returns dst indices of src outputs.
std::vector<int> append_program(Slp& dst, const Slp& src, const std::vector<int>& input_map) {
    if ((int)input_map.size() != src.arity())
        throw ArityMismatch("append_program: input map size mismatch");
    const int base = (int)dst.length();
    auto remap = [&](int idx) -> int {
        if (idx <= 0) return input_map[idx + src.arity() - 1];
        return idx + base;
    };
    for (const auto& ins : src.instructions()) {
        switch (ins.op) {
            case Slp::Op::Const: dst.push_const(ins.c); break;
            case Slp::Op::Scale: dst.push_scale(ins.c, remap(ins.a)); break;
            default: dst.push(ins.op, remap(ins.a), remap(ins.b)); break;
        }
    }
    std::vector<int> outs;
    outs.reserve(src.outputs().size());
    for (int o : src.outputs()) outs.push_back(remap(o));
    return outs;
}

std::vector<int> identity_inputs(int arity) {
    std::vector<int> v(arity);
    for (int j = 1; j <= arity; ++j) v[j - 1] = j - arity;
    return v;
}

} // namespace

// --- linear change ----------------------------------------------------------

LinearChange::LinearChange(int size, int fixed_prefix, std::vector<std::vector<Rat>> matrix)
    : n_(size), e_(fixed_prefix), m_(std::move(matrix)) {
    if ((int)m_.size() != n_) throw SizeMismatch("linear change: bad matrix size");
    for (auto& row : m_)
        if ((int)row.size() != n_) throw SizeMismatch("linear change: bad matrix size");
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat expect = (i == j) ? Rat(1) : Rat(0);
            if (m_[i][j] != expect || m_[j][i] != expect)
                throw SizeMismatch("linear change must fix the first e coordinates");
        }
    minv_ = invert_matrix(m_);
}

LinearChange LinearChange::identity(int size) {
    std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < size; ++i) m[i][i] = 1;
    return LinearChange(size, size, std::move(m));
}

std::vector<Rat> LinearChange::apply(const std::vector<Rat>& x) const {
    if ((int)x.size() != n_) throw SizeMismatch("linear change apply");
    std::vector<Rat> y(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) y[i] += m_[i][j] * x[j];
    return y;
}

std::vector<Rat> LinearChange::apply_inverse(const std::vector<Rat>& x) const {
    if ((int)x.size() != n_) throw SizeMismatch("linear change apply_inverse");
    std::vector<Rat> y(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) y[i] += minv_[i][j] * x[j];
    return y;
}

std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> m) {
    const int n = (int)m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(m[r][c])) { pr = r; break; }
        if (pr < 0) throw MathError("singular matrix");
        std::swap(m[c], m[pr]);
        std::swap(inv[c], inv[pr]);
        Rat piv = Rat(1) / m[c][c];
        for (int j = 0; j < n; ++j) { m[c][j] *= piv; inv[c][j] *= piv; }
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(m[r][c])) continue;
            Rat f = m[r][c];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// --- transformations ---------------------------------------------------------

Slp slp_jacobian(const Slp& s) {
    const int n = s.arity();
    Slp out(n, s.instructions(), s.outputs());
    std::vector<int> final_outputs = s.outputs();
    // Reverse sweep per output.
    for (int o : s.outputs()) {
        // adjoint[i] = dst index computing d(output)/d(node i); 0 = absent.
        std::vector<int> adj_instr(s.length() + 1, 0);
        std::vector<int> adj_input(n, 0);
        auto add_into = [&](int slot_is_input, int slot, int idx) {
            auto& cell = slot_is_input ? adj_input[slot] : adj_instr[slot];
            if (cell == 0) cell = idx;
            else cell = out.push(Slp::Op::Add, cell, idx);
        };
        auto seed = [&](int node_idx, int val_idx) {
            if (node_idx <= 0) add_into(1, node_idx + n - 1, val_idx);
            else add_into(0, node_idx, val_idx);
        };
        if (o <= 0) {
            // Output is an input variable: derivative is the unit vector.
            int one = out.push_const(Rat(1));
            adj_input[o + n - 1] = one;
        } else {
            int one = out.push_const(Rat(1));
            adj_instr[o] = one;
        }
        for (int i = (int)s.length(); i >= 1; --i) {
            const int a_idx = adj_instr[i];
            if (a_idx == 0) continue;
            const Slp::Instr& ins = s.instructions()[i - 1];
            switch (ins.op) {
                case Slp::Op::Const: break;
                case Slp::Op::Add:
                    seed(ins.a, a_idx);
                    seed(ins.b, a_idx);
                    break;
                case Slp::Op::Sub: {
                    seed(ins.a, a_idx);
                    int negv = out.push_scale(Rat(-1), a_idx);
                    seed(ins.b, negv);
                    break;
                }
                case Slp::Op::Mul: {
                    int da = out.push(Slp::Op::Mul, a_idx, ins.b);
                    seed(ins.a, da);
                    int db = out.push(Slp::Op::Mul, a_idx, ins.a);
                    seed(ins.b, db);
                    break;
                }
                case Slp::Op::Scale: {
                    int da = out.push_scale(ins.c, a_idx);
                    seed(ins.a, da);
                    break;
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            if (adj_input[j] == 0) adj_input[j] = out.push_const(Rat(0));
            final_outputs.push_back(adj_input[j]);
        }
    }
    out.set_outputs(final_outputs);
    return out;
}

Slp slp_substitute_prefix(const Slp& s, const std::vector<UniPoly>& values) {
    const int e = (int)values.size();
    if (e > s.arity()) throw ArityMismatch("substitute_prefix: too many values");
    const int n2 = s.arity() - e;
    Slp out(n2, {}, {});
    std::vector<int> imap(s.arity());
    for (int j = 1; j <= e; ++j) imap[j - 1] = out.push_const(values[j - 1]);
    for (int j = e + 1; j <= s.arity(); ++j) imap[j - 1] = (j - e) - n2;
    auto outs = append_program(out, s, imap);
    out.set_outputs(outs);
    return out;
}

Slp slp_change_vars(const Slp& s, const LinearChange& a) {
    if (a.size() > s.arity()) throw SizeMismatch("change_vars: matrix larger than arity");
    const int n = s.arity(), nb = a.size();
    Slp out(n, {}, {});
    std::vector<int> imap(n);
    for (int i = 1; i <= n; ++i) {
        if (i > nb) { imap[i - 1] = i - n; continue; }
        // y_i = sum_j A[i][j] x_j
        int acc = kNone;
        for (int j = 1; j <= nb; ++j) {
            const Rat& c = a.matrix()[i - 1][j - 1];
            if (is_zero(c)) continue;
            int term = (c == 1) ? (j - n) : out.push_scale(c, j - n);
            acc = acc == kNone ? term : out.push(Slp::Op::Add, acc, term);
        }
        if (acc == kNone) acc = out.push_const(Rat(0));
        imap[i - 1] = acc;
    }
    auto outs = append_program(out, s, imap);
    out.set_outputs(outs);
    return out;
}

Slp slp_minor(const Slp& jac_program, int jac_offset, int nvars,
              const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw SizeMismatch("slp_minor: non-square minor");
    const int m = (int)rows.size();
    Slp out = jac_program;
    const auto& outs = jac_program.outputs();
    auto entry = [&](int i, int j) -> int {
        return outs[jac_offset + rows[i] * nvars + cols[j]];
    };
    if (m == 0) {
        int one = out.push_const(Rat(1));
        auto o = out.outputs();
        o.push_back(one);
        out.set_outputs(o);
        return out;
    }
    // Berkowitz: char-poly coefficient vectors, division free.
    // c_1 = (1, -M[0][0]); c_r = Toeplitz(1, -s_0, ..., -s_{r-1}) c_{r-1}.
    int one = out.push_const(Rat(1));
    std::vector<int> c{one, out.push_scale(Rat(-1), entry(0, 0))};
    for (int r = 2; r <= m; ++r) {
        // s_0 = M[r-1][r-1], s_k = R A^{k-1} C for k = 1..r-1, with
        // R = M[r-1][0..r-2], C = M[0..r-2][r-1], A the (r-1) principal block.
        std::vector<int> s(r);
        s[0] = entry(r - 1, r - 1);
        std::vector<int> v(r - 1);
        for (int i = 0; i < r - 1; ++i) v[i] = entry(i, r - 1);
        for (int k = 1; k < r; ++k) {
            int dot = kNone;
            for (int i = 0; i < r - 1; ++i) {
                int t = out.push(Slp::Op::Mul, entry(r - 1, i), v[i]);
                dot = dot == kNone ? t : out.push(Slp::Op::Add, dot, t);
            }
            s[k] = dot;
            if (k + 1 < r) {
                std::vector<int> nv(r - 1);
                for (int i = 0; i < r - 1; ++i) {
                    int acc = kNone;
                    for (int j = 0; j < r - 1; ++j) {
                        int t = out.push(Slp::Op::Mul, entry(i, j), v[j]);
                        acc = acc == kNone ? t : out.push(Slp::Op::Add, acc, t);
                    }
                    nv[i] = acc;
                }
                v = std::move(nv);
            }
        }
        // c_new[i] = c[i] - sum_{k=0}^{i-1} s_{i-1-k} c[k], i = 0..r.
        std::vector<int> cn(r + 1);
        for (int i = 0; i <= r; ++i) {
            int acc = i < (int)c.size() ? c[i] : kNone;
            int sum = kNone;
            for (int k = 0; k < i && k < (int)c.size(); ++k) {
                int t = out.push(Slp::Op::Mul, s[i - 1 - k], c[k]);
                sum = sum == kNone ? t : out.push(Slp::Op::Add, sum, t);
            }
            if (acc == kNone && sum == kNone) cn[i] = out.push_const(Rat(0));
            else if (sum == kNone) cn[i] = acc;
            else if (acc == kNone) cn[i] = out.push_scale(Rat(-1), sum);
            else cn[i] = out.push(Slp::Op::Sub, acc, sum);
        }
        c = std::move(cn);
    }
    // det(M) = (-1)^m * c[m] (char poly evaluated at 0).
    int det = (m % 2) ? out.push_scale(Rat(-1), c[m]) : c[m];
    auto o = out.outputs();
    o.push_back(det);
    out.set_outputs(o);
    return out;
}

Slp slp_augment_lagrange(const Slp& s, int cut, const std::vector<Rat>& u) {
    const int n = s.arity();
    const int p = s.n_outputs();
    if ((int)u.size() != p) throw ArityMismatch("augment_lagrange: u must have one entry per output");
    if (cut < 0 || cut >= n)
        throw ArityMismatch("augment_lagrange: cut must leave at least one column");
    Slp jac = slp_jacobian(s);
    Slp out(n + p, {}, {});
    std::vector<int> imap(n);
    for (int j = 1; j <= n; ++j) imap[j - 1] = j - (n + p);
    auto jouts = append_program(out, jac, imap);
    std::vector<int> final_outputs;
    for (int i = 0; i < p; ++i) final_outputs.push_back(jouts[i]);
    // Lag rows: for each variable column j in cut..n-1 (0-based), the entry
    // sum_i L_i * dF_i/dX_j.
    auto jac_entry = [&](int i, int j) { return jouts[p + i * n + j]; };
    auto l_input = [&](int i) { return (n + i + 1) - (n + p); }; // L_{i+1}
    for (int j = cut; j < n; ++j) {
        int acc = kNone;
        for (int i = 0; i < p; ++i) {
            int t = out.push(Slp::Op::Mul, l_input(i), jac_entry(i, j));
            acc = acc == kNone ? t : out.push(Slp::Op::Add, acc, t);
        }
        final_outputs.push_back(acc);
    }
    // u . L - 1
    int acc = kNone;
    for (int i = 0; i < p; ++i) {
        if (is_zero(u[i])) continue;
        int t = (u[i] == 1) ? l_input(i) : out.push_scale(u[i], l_input(i));
        acc = acc == kNone ? t : out.push(Slp::Op::Add, acc, t);
    }
    if (acc == kNone) acc = out.push_const(Rat(0));
    int minus1 = out.push_const(Rat(-1));
    final_outputs.push_back(out.push(Slp::Op::Add, acc, minus1));
    out.set_outputs(final_outputs);
    return out;
}

Slp slp_select_outputs(const Slp& s, const std::vector<int>& which) {
    std::vector<int> outs;
    outs.reserve(which.size());
    for (int w : which) outs.push_back(s.outputs().at(w));
    Slp r = s;
    r.set_outputs(outs);
    return r;
}

Slp slp_concat(const Slp& a, const Slp& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("slp_concat: arity mismatch");
    Slp out = a;
    auto outs_b = append_program(out, b, identity_inputs(a.arity()));
    auto outs = out.outputs();
    outs.insert(outs.end(), outs_b.begin(), outs_b.end());
    out.set_outputs(outs);
    return out;
}

// --- text format -------------------------------------------------------------

std::string slp_to_text(const Slp& s) {
    std::ostringstream os;
    os << "# inputs: " << s.arity() << "\n";
    int k = 1;
    for (const auto& ins : s.instructions()) {
        os << k << ": ";
        switch (ins.op) {
            case Slp::Op::Const:
                if (ins.c.degree() > 0)
                    throw MathError("cannot serialize a program with nonrational constants");
                os << "CONST " << rat_to_string(ins.c.coeff(0));
                break;
            case Slp::Op::Add: os << "ADD " << ins.a << " " << ins.b; break;
            case Slp::Op::Sub: os << "SUB " << ins.a << " " << ins.b; break;
            case Slp::Op::Mul: os << "MUL " << ins.a << " " << ins.b; break;
            case Slp::Op::Scale:
                if (ins.c.degree() > 0)
                    throw MathError("cannot serialize a program with nonrational constants");
                os << "SCALE " << rat_to_string(ins.c.coeff(0)) << " " << ins.a;
                break;
        }
        os << "\n";
        ++k;
    }
    os << "# outputs:";
    for (int o : s.outputs()) os << " " << o;
    os << "\n";
    return os.str();
}

Slp slp_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int arity = -1;
    std::vector<int> outputs;
    Slp prog;
    bool started = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto nonblank = line.find_first_not_of(" \t\r");
        if (nonblank == std::string::npos) continue;
        if (line[nonblank] == '#') {
            std::istringstream hs(line.substr(nonblank + 1));
            std::string word;
            hs >> word;
            if (word == "inputs:") {
                hs >> arity;
                prog = Slp(arity, {}, {1});
                // temporary output placeholder replaced at the end
                started = true;
                prog = Slp(arity, {}, {});
            } else if (word == "outputs:") {
                int o;
                while (hs >> o) outputs.push_back(o);
            }
            continue;
        }
        if (!started) throw ParseError(lineno, 1, "missing '# inputs:' header");
        std::istringstream ls(line);
        int k;
        char colon;
        std::string op;
        if (!(ls >> k >> colon >> op) || colon != ':')
            throw ParseError(lineno, 1, "malformed instruction line");
        if (k != (int)prog.length() + 1)
            throw ParseError(lineno, 1, "instructions must be numbered consecutively");
        if (op == "CONST") {
            std::string c;
            ls >> c;
            prog.push_const(rat_from_string(c));
        } else if (op == "SCALE") {
            std::string c;
            int a;
            ls >> c >> a;
            prog.push_scale(rat_from_string(c), a);
        } else if (op == "ADD" || op == "SUB" || op == "MUL") {
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, 1, "expected two operands");
            prog.push(op == "ADD" ? Slp::Op::Add : op == "SUB" ? Slp::Op::Sub : Slp::Op::Mul, a, b);
        } else {
            throw ParseError(lineno, 1, "unknown opcode " + op);
        }
    }
    if (arity < 0) throw ParseError(1, 1, "missing '# inputs:' header");
    if (outputs.empty()) throw ParseError(lineno, 1, "missing '# outputs:' footer");
    prog.set_outputs(outputs);
    return prog;
}

// --- infix parser ------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void advance() {
        if (pos < src.size() && src[pos] == '\n') { ++line; col = 1; }
        else ++col;
        ++pos;
    }

    Token next() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) advance();
        if (pos >= src.size()) return {Token::End, "", line, col};
        int l = line, c = col;
        char ch = src[pos];
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::string id;
            while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
                id += src[pos];
                advance();
            }
            return {Token::Ident, id, l, c};
        }
        if (std::isdigit((unsigned char)ch)) {
            std::string num;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
                num += src[pos];
                advance();
            }
            return {Token::Number, num, l, c};
        }
        advance();
        return {Token::Punct, std::string(1, ch), l, c};
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;
    std::map<std::string, int> varindex; // name -> 1-based slot
    Slp prog;
    int arity = 0;

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }
    bool is_punct(const std::string& p) const {
        return peek().kind == Token::Punct && peek().text == p;
    }
    void expect_punct(const std::string& p) {
        if (!is_punct(p)) fail(peek(), "expected '" + p + "'");
        take();
    }

    // expr := term (('+'|'-') term)*
    int parse_expr() {
        int acc = parse_term();
        while (is_punct("+") || is_punct("-")) {
            bool plus = take().text == "+";
            int rhs = parse_term();
            acc = prog.push(plus ? Slp::Op::Add : Slp::Op::Sub, acc, rhs);
        }
        return acc;
    }

    // term := unary ('*' unary)*
    int parse_term() {
        int acc = parse_unary();
        while (is_punct("*")) {
            take();
            int rhs = parse_unary();
            acc = prog.push(Slp::Op::Mul, acc, rhs);
        }
        return acc;
    }

    int parse_unary() {
        bool negate = false;
        while (is_punct("-") || is_punct("+")) {
            if (take().text == "-") negate = !negate;
        }
        int v = parse_power();
        if (negate) v = prog.push_scale(Rat(-1), v);
        return v;
    }

    int parse_power() {
        int base = parse_atom();
        if (is_punct("^")) {
            Token caret = take();
            if (peek().kind != Token::Number) fail(peek(), "expected integer exponent");
            long e = std::stol(take().text);
            if (e < 0) fail(caret, "negative exponent");
            if (e == 0) return prog.push_const(Rat(1));
            // Square-and-multiply.
            constexpr int none = std::numeric_limits<int>::min();
            int acc = none, sq = base;
            while (e) {
                if (e & 1) acc = acc == none ? sq : prog.push(Slp::Op::Mul, acc, sq);
                e >>= 1;
                if (e) sq = prog.push(Slp::Op::Mul, sq, sq);
            }
            return acc;
        }
        return base;
    }

    int parse_atom() {
        const Token t = peek();
        if (t.kind == Token::Number) {
            take();
            Int num(t.text);
            if (is_punct("/")) {
                take();
                if (peek().kind != Token::Number) fail(peek(), "expected denominator");
                Int den(take().text);
                return prog.push_const(make_rat(num, den));
            }
            return prog.push_const(Rat(num));
        }
        if (t.kind == Token::Ident) {
            take();
            auto it = varindex.find(t.text);
            if (it == varindex.end()) fail(t, "unknown variable '" + t.text + "'");
            return it->second - arity;
        }
        if (t.kind == Token::Punct && t.text == "(") {
            take();
            int v = parse_expr();
            expect_punct(")");
            return v;
        }
        fail(t, "expected a number, variable or '('");
    }
};

} // namespace

ParsedSystem parse_system(const std::string& text) {
    Lexer lex(text);
    Parser p;
    for (;;) {
        Token t = lex.next();
        p.toks.push_back(t);
        if (t.kind == Token::End) break;
    }
    // vars decl
    if (p.peek().kind != Token::Ident || p.peek().text != "vars")
        p.fail(p.peek(), "system must start with 'vars'");
    p.take();
    std::vector<std::string> names;
    for (;;) {
        if (p.peek().kind != Token::Ident) p.fail(p.peek(), "expected variable name");
        std::string name = p.take().text;
        if (p.varindex.count(name)) p.fail(p.toks[p.i - 1], "duplicate variable");
        p.varindex[name] = (int)names.size() + 1;
        names.push_back(name);
        if (p.is_punct(",")) { p.take(); continue; }
        break;
    }
    p.expect_punct(";");
    p.arity = (int)names.size();
    p.prog = Slp(p.arity, {}, {});

    std::vector<int> fouts, gouts;
    while (p.peek().kind != Token::End) {
        bool is_g = false;
        if (p.peek().kind == Token::Ident && (p.peek().text == "f" || p.peek().text == "g") &&
            p.i + 1 < p.toks.size() && p.toks[p.i + 1].kind == Token::Punct &&
            p.toks[p.i + 1].text == ":") {
            is_g = p.peek().text == "g";
            p.take();
            p.take();
        }
        int v = p.parse_expr();
        p.expect_punct(";");
        (is_g ? gouts : fouts).push_back(v);
    }
    if (fouts.empty()) p.fail(p.peek(), "system has no polynomials");
    ParsedSystem out;
    out.vars = names;
    Slp base = p.prog;
    base.set_outputs(fouts);
    out.system = base;
    if (!gouts.empty()) {
        Slp gg = p.prog;
        gg.set_outputs(gouts);
        out.aux = gg;
        out.has_aux = true;
    }
    return out;
}

} // namespace rm
