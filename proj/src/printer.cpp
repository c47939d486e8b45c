#include "dynrel/printer.hpp"

#include <charconv>
#include <vector>

namespace dynrel {

namespace {

std::string number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string law_text(const Distribution& d) {
    switch (d.kind()) {
        case DistKind::Exponential:
            return "exponential(rate=" + number(d.rate()) + ")";
        case DistKind::Weibull:
            return "weibull(shape=" + number(d.shape()) + ", scale=" + number(d.scale()) + ")";
    }
    throw ModelError("print_model: unknown distribution");
}

class GatePrinter {
public:
    GatePrinter(const Model& m, std::string& out) : model_(m), out_(out) {}

    std::string emit(const DftPtr& e) {
        if (!e) throw ModelError("print_model: null node");
        switch (e->op) {
            case DftOp::Basic:
                return model_.event(e->id).name;
            case DftOp::And:
            case DftOp::Or:
                return emit_nary(e->op == DftOp::And ? "and" : "or", flatten(e, e->op), "");
            case DftOp::Pand:
                return emit_gate("pand", {emit(e->left), emit(e->right)}, "");
            case DftOp::Fdep:
                return emit_gate("fdep", {emit(e->left), emit(e->right)}, "");
            case DftOp::Wsp:
                return emit_gate("wsp", {emit(e->left), model_.event(e->id).name}, "");
            case DftOp::Always:
            case DftOp::Never:
                throw ModelError("print_model: identity elements have no surface syntax");
            case DftOp::Before:
            case DftOp::Simult:
            case DftOp::InclusiveBefore:
                throw ModelError(
                    "print_model: bare fault-tree temporal operators have no surface syntax");
        }
        throw ModelError("print_model: unknown node");
    }

    std::string emit(const DrbdPtr& e) {
        if (!e) throw ModelError("print_model: null node");
        switch (e->op) {
            case DrbdOp::Block:
                return model_.event(e->id).name;
            case DrbdOp::And:
            case DrbdOp::Or: {
                std::string note;
                if (e->origin == NodeOrigin::FdepTrigger) {
                    note = " # fdep trigger retained for display";
                }
                return emit_nary(e->op == DrbdOp::And ? "and" : "or", flatten(e, e->op), note);
            }
            case DrbdOp::After:
                return emit_gate("after", {emit(e->left), emit(e->right)}, "");
            case DrbdOp::Simult:
                return emit_gate("simult", {emit(e->left), emit(e->right)}, "");
            case DrbdOp::InclusiveAfter:
                return emit_gate("iafter", {emit(e->left), emit(e->right)}, "");
            case DrbdOp::Wsp:
                return emit_gate("wsp", {emit(e->left), model_.event(e->id).name}, "");
            case DrbdOp::Always:
            case DrbdOp::Never:
                throw ModelError("print_model: identity elements have no surface syntax");
        }
        throw ModelError("print_model: unknown node");
    }

private:
    static std::vector<DftPtr> flatten(const DftPtr& e, DftOp op) {
        if (e && e->op == op) {
            auto left = flatten(e->left, op);
            auto right = flatten(e->right, op);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        return {e};
    }

    static std::vector<DrbdPtr> flatten(const DrbdPtr& e, DrbdOp op) {
        if (e && e->op == op) {
            auto left = flatten(e->left, op);
            auto right = flatten(e->right, op);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        return {e};
    }

    template <typename Ptr>
    std::string emit_nary(const char* op, const std::vector<Ptr>& parts, const std::string& note) {
        std::vector<std::string> names;
        names.reserve(parts.size());
        for (const Ptr& p : parts) names.push_back(emit(p));
        return emit_gate(op, names, note);
    }

    std::string emit_gate(const char* op, const std::vector<std::string>& operands,
                          const std::string& note) {
        const std::string name = "g" + std::to_string(counter_++);
        out_ += "  gate " + name + " " + op;
        for (const std::string& arg : operands) out_ += " " + arg;
        out_ += ";" + note + "\n";
        return name;
    }

    const Model& model_;
    std::string& out_;
    int counter_ = 0;
};

}  // namespace

std::string print_model(const Model& m) {
    std::string out = (m.kind() == ModelKind::Dft ? "dft " : "drbd ") + m.name() + " {\n";
    for (const EventDecl& e : m.events()) {
        if (e.is_spare) {
            out += "  spare " + e.name + " active " + law_text(e.law) + " dormancy(" +
                   number(e.dormancy) + ");\n";
        } else {
            out += "  basic " + e.name + " " + law_text(e.law) + ";\n";
        }
    }
    GatePrinter gates(m, out);
    const std::string top =
        m.kind() == ModelKind::Dft ? gates.emit(m.dft_top()) : gates.emit(m.drbd_top());
    out += "  top " + top + ";\n}\n";
    return out;
}

}  // namespace dynrel
