#include "rpe/radical.hpp"

#include <cctype>
#include <map>
#include <unordered_map>

namespace rpe {

namespace {

struct Token {
    enum class Kind { lparen, rparen, atom } kind;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '(') {
            out.push_back({Token::Kind::lparen, "("});
            ++i;
        } else if (ch == ')') {
            out.push_back({Token::Kind::rparen, ")"});
            ++i;
        } else {
            size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
                   s[j] != '(' && s[j] != ')')
                ++j;
            out.push_back({Token::Kind::atom, std::string(s.substr(i, j - i))});
            i = j;
        }
    }
    return out;
}

bool is_number(const std::string& t) {
    size_t i = (t.size() > 1 && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    bool slash_seen = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '/' && !slash_seen && i + 1 < t.size()) {
            slash_seen = true;
        } else if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
            return false;
        }
    }
    return true;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    RadicalExpr run() {
        std::map<std::string, RadicalPtr> env;
        RadicalPtr top = expr(env);
        if (pos_ != toks_.size()) throw eval_error("trailing tokens in radical expression");
        return {top, std::move(degrees_)};
    }

  private:
    const Token& peek() const {
        if (pos_ >= toks_.size()) throw eval_error("unexpected end of radical expression");
        return toks_[pos_];
    }
    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }
    void expect_rparen() {
        if (next().kind != Token::Kind::rparen) throw eval_error("expected ')'");
    }

    // Ids follow the order of the opening root tokens in the text, so the
    // slot is reserved before the argument (which may contain more roots)
    // is parsed.
    int reserve_root_id() {
        degrees_.push_back(0);
        return static_cast<int>(degrees_.size()) - 1;
    }
    RadicalPtr make_root(unsigned long n, int id, RadicalPtr arg) {
        auto node = std::make_shared<RadicalNode>();
        node->op = RadicalNode::Op::root;
        node->root_n = n;
        node->root_id = id;
        node->args = {std::move(arg)};
        degrees_[static_cast<size_t>(id)] = n;
        return node;
    }

    RadicalPtr expr(std::map<std::string, RadicalPtr>& env) {
        Token t = next();
        if (t.kind == Token::Kind::rparen) throw eval_error("unexpected ')'");
        if (t.kind == Token::Kind::atom) {
            if (is_number(t.text)) {
                auto node = std::make_shared<RadicalNode>();
                node->op = RadicalNode::Op::constant;
                node->value = parse_rat(t.text);
                return node;
            }
            auto it = env.find(t.text);
            if (it == env.end()) throw eval_error("unbound symbol '" + t.text + "'");
            return it->second;
        }
        // '(' OP args ')'
        Token op = next();
        if (op.kind != Token::Kind::atom) throw eval_error("expected operator after '('");
        const std::string& name = op.text;

        if (name == "let") {
            Token sym = next();
            if (sym.kind != Token::Kind::atom || is_number(sym.text))
                throw eval_error("let needs a symbol name");
            RadicalPtr bound = expr(env);
            RadicalPtr shadowed;
            auto it = env.find(sym.text);
            bool had = it != env.end();
            if (had) shadowed = it->second;
            env[sym.text] = bound;
            RadicalPtr body = expr(env);
            if (had)
                env[sym.text] = shadowed;
            else
                env.erase(sym.text);
            expect_rparen();
            return body;
        }
        if (name == "sqrt" || name == "cbrt") {
            int id = reserve_root_id();
            RadicalPtr a = expr(env);
            expect_rparen();
            return make_root(name == "sqrt" ? 2 : 3, id, std::move(a));
        }
        if (name == "root") {
            int id = reserve_root_id();
            RadicalPtr a = expr(env);
            Token deg = next();
            if (deg.kind != Token::Kind::atom || !is_number(deg.text))
                throw eval_error("root needs an integer degree");
            Int n = parse_int(deg.text);
            if (n < 1 || n > 64) throw eval_error("root degree out of range");
            expect_rparen();
            return make_root(n.get_ui(), id, std::move(a));
        }
        if (name == "pow") {
            RadicalPtr a = expr(env);
            Token e = next();
            if (e.kind != Token::Kind::atom || !is_number(e.text))
                throw eval_error("pow needs an integer exponent");
            Int k = parse_int(e.text);
            if (!k.fits_slong_p()) throw eval_error("pow exponent out of range");
            auto node = std::make_shared<RadicalNode>();
            node->op = RadicalNode::Op::pow;
            node->exponent = k.get_si();
            node->args = {std::move(a)};
            expect_rparen();
            return node;
        }

        RadicalNode::Op kind;
        size_t min_args = 2, max_args = SIZE_MAX;
        if (name == "add") {
            kind = RadicalNode::Op::add;
        } else if (name == "mul") {
            kind = RadicalNode::Op::mul;
        } else if (name == "sub") {
            kind = RadicalNode::Op::sub;
            max_args = 2;
        } else if (name == "div") {
            kind = RadicalNode::Op::div;
            max_args = 2;
        } else if (name == "neg") {
            kind = RadicalNode::Op::neg;
            min_args = max_args = 1;
        } else {
            throw eval_error("unknown operator '" + name + "'");
        }
        auto node = std::make_shared<RadicalNode>();
        node->op = kind;
        while (peek().kind != Token::Kind::rparen) node->args.push_back(expr(env));
        ++pos_;  // consume ')'
        if (node->args.size() < min_args || node->args.size() > max_args)
            throw eval_error("wrong argument count for '" + name + "'");
        return node;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::vector<unsigned long> degrees_;
};

class Evaluator {
  public:
    Evaluator(const BranchAssignment& br, const Ctx& outer) : br_(br), w_(outer.boosted(20)), p_(outer.digits) {}

    Complex eval(const RadicalPtr& node) {
        auto it = memo_.find(node.get());
        if (it != memo_.end()) return it->second;
        Complex v = compute(node);
        memo_.emplace(node.get(), v);
        return v;
    }

  private:
    Complex compute(const RadicalPtr& node) {
        using Op = RadicalNode::Op;
        switch (node->op) {
            case Op::constant:
                return Complex(node->value, w_);
            case Op::add: {
                Complex acc = eval(node->args[0]);
                for (size_t i = 1; i < node->args.size(); ++i) acc = acc + eval(node->args[i]);
                return acc;
            }
            case Op::mul: {
                Complex acc = eval(node->args[0]);
                for (size_t i = 1; i < node->args.size(); ++i) acc = acc * eval(node->args[i]);
                return acc;
            }
            case Op::sub:
                return eval(node->args[0]) - eval(node->args[1]);
            case Op::div: {
                Complex den = eval(node->args[1]);
                if (abs(den) < pow10(-p_, w_))
                    throw eval_error("radical evaluation: divisor vanishes");
                return eval(node->args[0]) / den;
            }
            case Op::neg:
                return -eval(node->args[0]);
            case Op::pow: {
                Complex base = eval(node->args[0]);
                if (node->exponent < 0 && abs(base) < pow10(-p_, w_))
                    throw eval_error("radical evaluation: negative power of vanishing value");
                return pow_int(base, node->exponent);
            }
            case Op::root: {
                unsigned long b = 0;
                if (static_cast<size_t>(node->root_id) < br_.size())
                    b = br_[static_cast<size_t>(node->root_id)];
                if (b >= node->root_n) throw eval_error("branch index out of range");
                return nth_root_branch(eval(node->args[0]), node->root_n, b);
            }
        }
        throw eval_error("corrupt radical node");
    }

    const BranchAssignment& br_;
    Ctx w_;
    long p_;
    std::unordered_map<const RadicalNode*, Complex> memo_;
};

}  // namespace

RadicalExpr parse_radical(std::string_view text) { return Parser(text).run(); }

Complex eval_radical(const RadicalExpr& e, const BranchAssignment& br, const Ctx& c) {
    if (br.size() != e.root_count())
        throw eval_error("branch assignment length mismatch");
    Evaluator ev(br, c);
    Complex v = ev.eval(e.top);
    return {round_to(v.re, c), round_to(v.im, c)};
}

Complex eval_radical(const RadicalExpr& e, const Ctx& c) {
    return eval_radical(e, BranchAssignment(e.root_count(), 0), c);
}

std::optional<BranchAssignment> branch_search(const RadicalExpr& e, const Real& target,
                                              const Ctx& c) {
    if (e.root_count() > 8) throw range_error("branch search supports at most 8 root nodes");
    unsigned long total = 1;
    for (unsigned long n : e.root_degrees) {
        total *= n;
        if (total > 1'000'000) throw range_error("branch space too large");
    }
    Real im_tol = pow10(-(c.digits / 2), c);
    Real re_tol = pow10(-(c.digits - 20), c);
    BranchAssignment br(e.root_count(), 0);
    for (unsigned long i = 0; i < total; ++i) {
        bool usable = true;
        Complex v(0, c);
        try {
            v = eval_radical(e, br, c);
        } catch (const eval_error&) {
            usable = false;  // rotated branch hit a vanishing divisor
        }
        if (usable && abs(v.im) < im_tol && abs(v.re - target) < re_tol) return br;
        // lexicographic increment: last id is least significant
        size_t j = br.size();
        while (j-- > 0) {
            if (++br[j] < e.root_degrees[j]) break;
            br[j] = 0;
        }
    }
    return std::nullopt;
}

std::string format_assignment(const BranchAssignment& br) {
    std::string out = "(";
    for (size_t i = 0; i < br.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(br[i]);
    }
    return out + ")";
}

}  // namespace rpe
