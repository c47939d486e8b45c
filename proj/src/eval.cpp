#include "dynrel/eval.hpp"

#include <cmath>

namespace dynrel {

namespace {

ExtTime before_op(ExtTime a, ExtTime b) { return a < b ? a : ExtTime::never(); }
ExtTime simult_op(ExtTime a, ExtTime b) { return a == b ? a : ExtTime::never(); }
ExtTime inclusive_before_op(ExtTime a, ExtTime b) { return a <= b ? a : ExtTime::never(); }
ExtTime after_op(ExtTime x, ExtTime y) { return x > y ? x : ExtTime::never(); }
ExtTime inclusive_after_op(ExtTime x, ExtTime y) { return x >= y ? x : ExtTime::never(); }

void check_event_time(double t) {
    if (std::isnan(t) || std::isinf(t) || t < 0.0) {
        throw DomainError("event time must be a finite nonnegative real");
    }
}

}  // namespace

ExtTime eval_dft(const DftPtr& expr, const Assignment& a) {
    if (!expr) throw ModelError("eval_dft: null expression");
    switch (expr->op) {
        case DftOp::Basic:
            return a.time_of(expr->id);
        case DftOp::Always:
            return ExtTime::always();
        case DftOp::Never:
            return ExtTime::never();
        case DftOp::And:
            return max(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::Or:
            return min(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::Before:
            return before_op(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::Simult:
            return simult_op(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::InclusiveBefore:
            return inclusive_before_op(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::Pand: {
            const ExtTime x = eval_dft(expr->left, a);
            const ExtTime y = eval_dft(expr->right, a);
            return x <= y ? y : ExtTime::never();
        }
        case DftOp::Fdep:
            return min(eval_dft(expr->left, a), eval_dft(expr->right, a));
        case DftOp::Wsp: {
            // Four-way disjunction over the main part Y and the spare's two
            // coordinates: main fails uncovered after a dormant spare loss,
            // the activated spare fails after the main, or a simultaneity.
            const ExtTime y = eval_dft(expr->left, a);
            const SpareTimes st = a.spare_of(expr->id);
            const ExtTime dormant_loss = max(y, before_op(st.dormant, y));
            const ExtTime active_loss = max(st.active, before_op(y, st.active));
            ExtTime out = min(dormant_loss, active_loss);
            out = min(out, simult_op(y, st.active));
            out = min(out, simult_op(y, st.dormant));
            return out;
        }
    }
    throw ModelError("eval_dft: unknown node");
}

ExtTime eval_drbd(const DrbdPtr& expr, const Assignment& a) {
    if (!expr) throw ModelError("eval_drbd: null expression");
    switch (expr->op) {
        case DrbdOp::Block:
            return a.time_of(expr->id);
        case DrbdOp::Always:
            return ExtTime::always();
        case DrbdOp::Never:
            return ExtTime::never();
        case DrbdOp::And:
            return min(eval_drbd(expr->left, a), eval_drbd(expr->right, a));
        case DrbdOp::Or:
            return max(eval_drbd(expr->left, a), eval_drbd(expr->right, a));
        case DrbdOp::After:
            return after_op(eval_drbd(expr->left, a), eval_drbd(expr->right, a));
        case DrbdOp::Simult:
            return simult_op(eval_drbd(expr->left, a), eval_drbd(expr->right, a));
        case DrbdOp::InclusiveAfter:
            return inclusive_after_op(eval_drbd(expr->left, a), eval_drbd(expr->right, a));
        case DrbdOp::Wsp: {
            // Spare construct: the pair keeps working until the activated
            // spare fails after the main, or the main fails after a dormant
            // spare loss.
            const ExtTime y = eval_drbd(expr->left, a);
            const SpareTimes st = a.spare_of(expr->id);
            return min(after_op(st.active, y), after_op(y, st.dormant));
        }
    }
    throw ModelError("eval_drbd: unknown node");
}

bool dft_event_holds(const DftPtr& expr, const Assignment& a, double t) {
    check_event_time(t);
    return eval_dft(expr, a) <= ExtTime::finite(t);
}

bool drbd_event_holds(const DrbdPtr& expr, const Assignment& a, double t) {
    check_event_time(t);
    return eval_drbd(expr, a) > ExtTime::finite(t);
}

bool equal(const DftPtr& a, const DftPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op || a->id != b->id) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

bool equal(const DrbdPtr& a, const DrbdPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op || a->id != b->id) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

}  // namespace dynrel
