#include "dynrel/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace dynrel {

std::string format_diagnostic(const Diagnostic& d) {
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
           (d.severity == Severity::Error ? "error: " : "warning: ") + d.message + " [" + d.code +
           "]";
}

bool ParseResult::has_errors() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

enum class Tok : std::uint8_t { Ident, Number, LBrace, RBrace, LParen, RParen, Semi, Eq, Comma, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;
};

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words = {
        "dft",  "drbd",    "basic", "spare",       "gate",  "top",   "active",
        "dormancy", "exponential", "weibull", "rate", "shape", "scale",
        "and",  "or",      "pand",  "fdep",        "wsp",   "after", "simult", "iafter"};
    return words;
}

class Lexer {
public:
    Lexer(std::string_view text, std::vector<Diagnostic>& diags) : text_(text), diags_(diags) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_blank();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= text_.size()) {
                t.kind = Tok::End;
                tokens.push_back(t);
                return tokens;
            }
            const char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                t.text = take_while([](char ch) {
                    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                });
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
                       c == '.') {
                t.kind = Tok::Number;
                t.text = take_while([](char ch) {
                    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' ||
                           ch == 'e' || ch == 'E' || ch == '+' || ch == '-';
                });
                const char* begin = t.text.data();
                const char* end = begin + t.text.size();
                auto [ptr, ec] = std::from_chars(begin, end, t.number);
                if (ec != std::errc() || ptr != end) {
                    diags_.push_back({Severity::Error, t.line, t.column,
                                      "malformed number '" + t.text + "'", "syntax"});
                    t.number = 0.0;
                }
            } else {
                switch (c) {
                    case '{': t.kind = Tok::LBrace; break;
                    case '}': t.kind = Tok::RBrace; break;
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    case ';': t.kind = Tok::Semi; break;
                    case '=': t.kind = Tok::Eq; break;
                    case ',': t.kind = Tok::Comma; break;
                    default:
                        diags_.push_back({Severity::Error, t.line, t.column,
                                          std::string("unexpected character '") + c + "'",
                                          "syntax"});
                        advance();
                        continue;
                }
                t.text = std::string(1, c);
                advance();
            }
            tokens.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    template <typename Pred>
    std::string take_while(Pred pred) {
        std::string s;
        while (pos_ < text_.size() && pred(text_[pos_])) {
            s.push_back(text_[pos_]);
            advance();
        }
        return s;
    }

    std::string_view text_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct RawDist {
    Distribution law = Distribution::exponential(1.0);
    bool ok = false;
};

struct RawGate {
    std::string name;
    std::string op;
    std::vector<Token> operands;
    SourceLoc loc;
};

// Thrown to resynchronize at the next ';' after a syntax error.
struct SyncPoint {};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
        : tokens_(std::move(tokens)), diags_(diags) {}

    std::optional<Model> run() {
        parse_header();
        if (fatal_) return std::nullopt;
        parse_body();
        if (has_errors()) return std::nullopt;
        return resolve();
    }

private:
    // ---- token plumbing ----

    const Token& peek() const { return tokens_[pos_]; }
    const Token& get() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(const char* w) const { return at(Tok::Ident) && peek().text == w; }

    void error_here(const std::string& message, const std::string& code = "syntax") {
        diags_.push_back({Severity::Error, peek().line, peek().column, message, code});
    }

    void error_at(const Token& t, const std::string& message, const std::string& code) {
        diags_.push_back({Severity::Error, t.line, t.column, message, code});
    }

    void warn_at(SourceLoc loc, const std::string& message, const std::string& code) {
        diags_.push_back({Severity::Warning, loc.line, loc.column, message, code});
    }

    bool has_errors() const {
        return std::any_of(diags_.begin(), diags_.end(),
                           [](const Diagnostic& d) { return d.severity == Severity::Error; });
    }

    Token expect(Tok k, const char* what) {
        if (!at(k)) {
            error_here(std::string("expected ") + what + ", found '" + describe(peek()) + "'");
            throw SyncPoint{};
        }
        return get();
    }

    void expect_word(const char* w) {
        if (!at_word(w)) {
            error_here(std::string("expected '") + w + "', found '" + describe(peek()) + "'");
            throw SyncPoint{};
        }
        get();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return t.text;
    }

    Token expect_name(const char* what) {
        Token t = expect(Tok::Ident, what);
        if (reserved_words().count(t.text)) {
            error_at(t, "'" + t.text + "' is a reserved word and cannot name a declaration",
                     "reserved");
            throw SyncPoint{};
        }
        return t;
    }

    void synchronize() {
        while (!at(Tok::End) && !at(Tok::Semi) && !at(Tok::RBrace)) get();
        if (at(Tok::Semi)) get();
    }

    // ---- grammar ----

    void parse_header() {
        if (at_word("dft")) {
            kind_ = ModelKind::Dft;
        } else if (at_word("drbd")) {
            kind_ = ModelKind::Drbd;
        } else {
            error_here("expected 'dft' or 'drbd' at start of model");
            fatal_ = true;
            return;
        }
        get();
        try {
            model_name_ = expect_name("model name").text;
            expect(Tok::LBrace, "'{'");
        } catch (const SyncPoint&) {
            fatal_ = true;
        }
    }

    void parse_body() {
        bool saw_top = false;
        while (!at(Tok::End) && !at(Tok::RBrace)) {
            try {
                if (at_word("basic")) {
                    if (saw_top) error_here("declarations must precede 'top'");
                    parse_basic();
                } else if (at_word("spare")) {
                    if (saw_top) error_here("declarations must precede 'top'");
                    parse_spare();
                } else if (at_word("gate")) {
                    if (saw_top) error_here("declarations must precede 'top'");
                    parse_gate();
                } else if (at_word("top")) {
                    if (saw_top) error_here("duplicate 'top' declaration");
                    get();
                    top_ = expect(Tok::Ident, "top event name");
                    expect(Tok::Semi, "';'");
                    saw_top = true;
                } else {
                    error_here("expected a declaration ('basic', 'spare', 'gate' or 'top')");
                    throw SyncPoint{};
                }
            } catch (const SyncPoint&) {
                synchronize();
            }
        }
        if (at(Tok::RBrace)) {
            get();
        } else {
            error_here("expected '}' to close the model");
        }
        if (!saw_top && !has_errors()) {
            error_here("model has no 'top' declaration");
        }
    }

    void declare(const Token& name) {
        if (declared_.count(name.text)) {
            error_at(name, "duplicate declaration of '" + name.text + "'", "duplicate-id");
            throw SyncPoint{};
        }
        declared_.insert(name.text);
    }

    RawDist parse_dist() {
        RawDist d;
        if (at_word("exponential")) {
            get();
            expect(Tok::LParen, "'('");
            expect_word("rate");
            expect(Tok::Eq, "'='");
            const Token rate = expect(Tok::Number, "rate value");
            expect(Tok::RParen, "')'");
            if (!(rate.number > 0.0)) {
                error_at(rate, "rate must be positive", "parameter-range");
            } else {
                d.law = Distribution::exponential(rate.number);
                d.ok = true;
            }
        } else if (at_word("weibull")) {
            get();
            expect(Tok::LParen, "'('");
            expect_word("shape");
            expect(Tok::Eq, "'='");
            const Token shape = expect(Tok::Number, "shape value");
            expect(Tok::Comma, "','");
            expect_word("scale");
            expect(Tok::Eq, "'='");
            const Token scale = expect(Tok::Number, "scale value");
            expect(Tok::RParen, "')'");
            if (!(shape.number > 0.0)) {
                error_at(shape, "shape must be positive", "parameter-range");
            } else if (!(scale.number > 0.0)) {
                error_at(scale, "scale must be positive", "parameter-range");
            } else {
                d.law = Distribution::weibull(shape.number, scale.number);
                d.ok = true;
            }
        } else {
            error_here("expected a distribution ('exponential' or 'weibull')");
            throw SyncPoint{};
        }
        return d;
    }

    void parse_basic() {
        get();
        const Token name = expect_name("event name");
        declare(name);
        const RawDist d = parse_dist();
        expect(Tok::Semi, "';'");
        if (d.ok) {
            basics_.push_back({name.text, d.law, {name.line, name.column}});
        }
    }

    void parse_spare() {
        get();
        const Token name = expect_name("spare name");
        declare(name);
        expect_word("active");
        const RawDist d = parse_dist();
        expect_word("dormancy");
        expect(Tok::LParen, "'('");
        const Token alpha = expect(Tok::Number, "dormancy factor");
        expect(Tok::RParen, "')'");
        expect(Tok::Semi, "';'");
        if (d.ok) {
            spares_.push_back({name.text, d.law, alpha.number, {name.line, name.column}});
        }
    }

    void parse_gate() {
        get();
        const Token name = expect_name("gate name");
        declare(name);
        RawGate g;
        g.name = name.text;
        g.loc = {name.line, name.column};
        const Token op = expect(Tok::Ident, "gate operator");
        static const std::set<std::string> ops = {"and",  "or",    "pand",   "fdep",
                                                  "wsp",  "after", "simult", "iafter"};
        if (!ops.count(op.text)) {
            error_at(op, "unknown operator '" + op.text + "'", "syntax");
            throw SyncPoint{};
        }
        g.op = op.text;
        while (at(Tok::Ident)) g.operands.push_back(get());
        expect(Tok::Semi, "';'");
        gates_.push_back(std::move(g));
        gate_index_[gates_.back().name] = gates_.size() - 1;
    }

    // ---- resolution ----

    struct BasicDecl {
        std::string name;
        Distribution law;
        SourceLoc loc;
    };
    struct SpareDecl {
        std::string name;
        Distribution law;
        double dormancy;
        SourceLoc loc;
    };

    std::optional<Model> resolve() {
        Model m(model_name_, kind_);
        for (const BasicDecl& b : basics_) m.add_basic(b.name, b.law, b.loc);
        for (const SpareDecl& s : spares_) m.add_spare(s.name, s.law, s.dormancy, s.loc);
        model_ = &m;

        try {
            if (kind_ == ModelKind::Dft) {
                m.set_top(resolve_dft(top_));
            } else {
                m.set_top(resolve_drbd(top_));
            }
        } catch (const SyncPoint&) {
            return std::nullopt;
        }
        if (has_errors()) return std::nullopt;

        for (const RawGate& g : gates_) {
            if (!used_gates_.count(g.name)) {
                warn_at(g.loc, "gate '" + g.name + "' is not reachable from the top event",
                        "unreachable");
            }
        }
        return m;
    }

    enum class RefKind { Basic, Spare, Gate };

    RefKind classify(const Token& ref) {
        if (gate_index_.count(ref.text)) return RefKind::Gate;
        const auto id = model_->find_event(ref.text);
        if (!id) {
            error_at(ref, "reference to undeclared name '" + ref.text + "'", "reference");
            throw SyncPoint{};
        }
        return model_->is_spare(*id) ? RefKind::Spare : RefKind::Basic;
    }

    void reject_spare_operand(const Token& ref) {
        error_at(ref,
                 "spare '" + ref.text + "' may appear only as the spare operand of a wsp gate",
                 "reference");
        throw SyncPoint{};
    }

    void check_arity(const RawGate& g, bool exact_two) {
        const std::size_t n = g.operands.size();
        if (exact_two ? n != 2 : n < 2) {
            diags_.push_back({Severity::Error, g.loc.line, g.loc.column,
                              "operator '" + g.op + "' takes " +
                                  (exact_two ? std::string("exactly 2")
                                             : std::string("at least 2")) +
                                  " operands, got " + std::to_string(n),
                              "arity"});
            throw SyncPoint{};
        }
    }

    EventId resolve_spare_ref(const Token& ref) {
        if (classify(ref) != RefKind::Spare) {
            error_at(ref, "the spare operand of wsp must name a spare declaration, and '" +
                              ref.text + "' is not one",
                     "reference");
            throw SyncPoint{};
        }
        return *model_->find_event(ref.text);
    }

    DftPtr resolve_dft(const Token& ref) {
        switch (classify(ref)) {
            case RefKind::Basic:
                return dft::basic(*model_->find_event(ref.text));
            case RefKind::Spare:
                reject_spare_operand(ref);
                return nullptr;
            case RefKind::Gate:
                break;
        }
        const RawGate& g = gates_[gate_index_.at(ref.text)];
        if (expanding_.count(g.name)) {
            error_at(ref, "gate '" + g.name + "' is part of a reference cycle", "cycle");
            throw SyncPoint{};
        }
        expanding_.insert(g.name);
        used_gates_.insert(g.name);
        DftPtr out;
        if (g.op == "and" || g.op == "or") {
            check_arity(g, false);
            out = resolve_dft(g.operands[0]);
            for (std::size_t i = 1; i < g.operands.size(); ++i) {
                DftPtr rhs = resolve_dft(g.operands[i]);
                out = g.op == "and" ? dft::gate_and(out, rhs) : dft::gate_or(out, rhs);
            }
        } else if (g.op == "pand") {
            check_arity(g, true);
            out = dft::pand(resolve_dft(g.operands[0]), resolve_dft(g.operands[1]));
        } else if (g.op == "fdep") {
            check_arity(g, true);
            out = dft::fdep(resolve_dft(g.operands[0]), resolve_dft(g.operands[1]));
        } else if (g.op == "wsp") {
            check_arity(g, true);
            DftPtr main = resolve_dft(g.operands[0]);
            out = dft::wsp(std::move(main), resolve_spare_ref(g.operands[1]));
        } else {
            diags_.push_back({Severity::Error, g.loc.line, g.loc.column,
                              "operator '" + g.op + "' is not a fault-tree gate", "syntax"});
            throw SyncPoint{};
        }
        expanding_.erase(g.name);
        return out;
    }

    DrbdPtr resolve_drbd(const Token& ref) {
        switch (classify(ref)) {
            case RefKind::Basic:
                return drbd::block(*model_->find_event(ref.text));
            case RefKind::Spare:
                reject_spare_operand(ref);
                return nullptr;
            case RefKind::Gate:
                break;
        }
        const RawGate& g = gates_[gate_index_.at(ref.text)];
        if (expanding_.count(g.name)) {
            error_at(ref, "gate '" + g.name + "' is part of a reference cycle", "cycle");
            throw SyncPoint{};
        }
        expanding_.insert(g.name);
        used_gates_.insert(g.name);
        DrbdPtr out;
        if (g.op == "and" || g.op == "or") {
            check_arity(g, false);
            out = resolve_drbd(g.operands[0]);
            for (std::size_t i = 1; i < g.operands.size(); ++i) {
                DrbdPtr rhs = resolve_drbd(g.operands[i]);
                out = g.op == "and" ? drbd::gate_and(out, rhs) : drbd::gate_or(out, rhs);
            }
        } else if (g.op == "after" || g.op == "simult" || g.op == "iafter") {
            check_arity(g, true);
            DrbdPtr lhs = resolve_drbd(g.operands[0]);
            DrbdPtr rhs = resolve_drbd(g.operands[1]);
            if (g.op == "after") out = drbd::after(lhs, rhs);
            if (g.op == "simult") out = drbd::simult(lhs, rhs);
            if (g.op == "iafter") out = drbd::inclusive_after(lhs, rhs);
        } else if (g.op == "wsp") {
            check_arity(g, true);
            DrbdPtr main = resolve_drbd(g.operands[0]);
            out = drbd::wsp(std::move(main), resolve_spare_ref(g.operands[1]));
        } else {
            diags_.push_back({Severity::Error, g.loc.line, g.loc.column,
                              "operator '" + g.op + "' is not a block-diagram operator",
                              "syntax"});
            throw SyncPoint{};
        }
        expanding_.erase(g.name);
        return out;
    }

    std::vector<Token> tokens_;
    std::vector<Diagnostic>& diags_;
    std::size_t pos_ = 0;
    bool fatal_ = false;

    ModelKind kind_ = ModelKind::Dft;
    std::string model_name_;
    Token top_;
    std::vector<BasicDecl> basics_;
    std::vector<SpareDecl> spares_;
    std::vector<RawGate> gates_;
    std::unordered_map<std::string, std::size_t> gate_index_;
    std::unordered_set<std::string> declared_;
    std::unordered_set<std::string> expanding_;
    std::unordered_set<std::string> used_gates_;
    Model* model_ = nullptr;
};

}  // namespace

ParseResult parse_model(std::string_view text) {
    ParseResult result;
    Lexer lexer(text, result.diagnostics);
    Parser parser(lexer.run(), result.diagnostics);
    auto model = parser.run();
    if (model && !result.has_errors()) result.model = std::move(model);
    return result;
}

namespace {

void collect_module_events(const Model& m, std::vector<std::vector<EventId>>& out) {
    // Top-level or-chain modules for fault trees; the whole expression as
    // one module otherwise.
    if (m.kind() == ModelKind::Dft) {
        std::vector<DftPtr> modules;
        const std::function<void(const DftPtr&)> flatten = [&](const DftPtr& e) {
            if (e && e->op == DftOp::Or) {
                flatten(e->left);
                flatten(e->right);
            } else {
                modules.push_back(e);
            }
        };
        flatten(m.dft_top());
        for (const DftPtr& module : modules) {
            std::vector<EventId> ids;
            for_each_node(module, [&](const DftExpr& n) {
                if (n.op == DftOp::Basic || n.op == DftOp::Wsp) ids.push_back(n.id);
            });
            out.push_back(std::move(ids));
        }
    } else {
        std::vector<EventId> ids;
        for_each_node(m.drbd_top(), [&](const DrbdExpr& n) {
            if (n.op == DrbdOp::Block || n.op == DrbdOp::Wsp) ids.push_back(n.id);
        });
        out.push_back(std::move(ids));
    }
}

}  // namespace

std::vector<Diagnostic> validate(const Model& m, ValidationTarget target) {
    std::vector<Diagnostic> diags;
    if (!m.has_top()) {
        diags.push_back({Severity::Error, 0, 0, "model has no top expression", "structure"});
        return diags;
    }

    // Dormancy range.
    for (const EventDecl& e : m.events()) {
        if (e.is_spare && !(e.dormancy >= 0.0 && e.dormancy <= 1.0)) {
            diags.push_back({Severity::Error, e.loc.line, e.loc.column,
                             "dormancy factor of spare '" + e.name + "' must lie in [0,1], got " +
                                 std::to_string(e.dormancy),
                             "dormancy-range"});
        }
    }

    // Shared events across independence modules.
    std::vector<std::vector<EventId>> modules;
    collect_module_events(m, modules);
    std::unordered_set<EventId> seen;
    std::set<EventId> shared;
    for (const auto& ids : modules) {
        for (EventId id : ids) {
            if (!seen.insert(id).second) shared.insert(id);
        }
    }
    const Severity sharing_severity = (target == ValidationTarget::AnalyticDft)
                                          ? Severity::Error
                                          : Severity::Warning;
    for (EventId id : shared) {
        if (m.is_spare(id)) continue;  // reported as shared-spare below
        const EventDecl& e = m.event(id);
        diags.push_back({sharing_severity, e.loc.line, e.loc.column,
                         "event '" + e.name +
                             "' is referenced by more than one independence module; the "
                             "inclusion-exclusion route does not apply",
                         "shared-events"});
    }

    // A spare adopted by more than one wsp node.
    std::unordered_map<EventId, int> wsp_uses;
    const auto count_wsp = [&](EventId id) { ++wsp_uses[id]; };
    if (m.kind() == ModelKind::Dft) {
        for_each_node(m.dft_top(), [&](const DftExpr& n) {
            if (n.op == DftOp::Wsp) count_wsp(n.id);
        });
    } else {
        for_each_node(m.drbd_top(), [&](const DrbdExpr& n) {
            if (n.op == DrbdOp::Wsp) count_wsp(n.id);
        });
    }
    for (const auto& [id, uses] : wsp_uses) {
        if (uses > 1) {
            const EventDecl& e = m.event(id);
            diags.push_back({Severity::Error, e.loc.line, e.loc.column,
                             "spare '" + e.name + "' is adopted by " + std::to_string(uses) +
                                 " wsp gates; a spare serves a single main part",
                             "shared-spare"});
        }
    }

    // Unreachable events.
    std::unordered_set<EventId> referenced;
    for (EventId id : referenced_events(m)) referenced.insert(id);
    for (EventId id = 0; id < m.event_count(); ++id) {
        if (!referenced.count(id)) {
            const EventDecl& e = m.event(id);
            diags.push_back({Severity::Warning, e.loc.line, e.loc.column,
                             "event '" + e.name + "' is not reachable from the top event",
                             "unreachable"});
        }
    }
    return diags;
}

}  // namespace dynrel
