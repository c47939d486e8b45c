#pragma once

#include <cstdint>
#include <memory>

namespace dynrel {

/// Dense index into a model's event table.
using EventId = std::uint32_t;

enum class DftOp : std::uint8_t {
    Basic,
    Always,
    Never,
    And,              // max of failure times
    Or,               // min of failure times
    Before,           // left if it fails strictly first, else NEVER
    Simult,           // left if both fail together, else NEVER
    InclusiveBefore,  // left if it fails first or together, else NEVER
    Pand,             // right operand's time if inputs fail in order, else NEVER
    Fdep,             // trigger/dependent, earlier of the two
    Wsp,              // main expression + spare event (two coordinates)
};

enum class DrbdOp : std::uint8_t {
    Block,
    Always,
    Never,
    And,             // series: min of failure times
    Or,              // parallel: max of failure times
    After,           // left if it outlives right, else NEVER
    Simult,
    InclusiveAfter,  // left if it fails last or together, else NEVER
    Wsp,
};

struct DftExpr;
struct DrbdExpr;
using DftPtr = std::shared_ptr<const DftExpr>;
using DrbdPtr = std::shared_ptr<const DrbdExpr>;

/// Immutable tree node. `id` is the basic event for Basic and the spare
/// event for Wsp (whose main part is `left`). Safe to share across threads.
struct DftExpr {
    DftOp op;
    EventId id = 0;
    DftPtr left;
    DftPtr right;
};

/// Node origin tag kept by conversions for display only; it never affects
/// evaluation or structural equality.
enum class NodeOrigin : std::uint8_t { None, FdepTrigger };

struct DrbdExpr {
    DrbdOp op;
    EventId id = 0;
    DrbdPtr left;
    DrbdPtr right;
    NodeOrigin origin = NodeOrigin::None;
};

namespace dft {

inline DftPtr make(DftOp op, EventId id, DftPtr l, DftPtr r) {
    return std::make_shared<DftExpr>(DftExpr{op, id, std::move(l), std::move(r)});
}

inline DftPtr basic(EventId e) { return make(DftOp::Basic, e, nullptr, nullptr); }
inline DftPtr always() { return make(DftOp::Always, 0, nullptr, nullptr); }
inline DftPtr never() { return make(DftOp::Never, 0, nullptr, nullptr); }
inline DftPtr gate_and(DftPtr l, DftPtr r) { return make(DftOp::And, 0, std::move(l), std::move(r)); }
inline DftPtr gate_or(DftPtr l, DftPtr r) { return make(DftOp::Or, 0, std::move(l), std::move(r)); }
inline DftPtr before(DftPtr l, DftPtr r) { return make(DftOp::Before, 0, std::move(l), std::move(r)); }
inline DftPtr simult(DftPtr l, DftPtr r) { return make(DftOp::Simult, 0, std::move(l), std::move(r)); }
inline DftPtr inclusive_before(DftPtr l, DftPtr r) {
    return make(DftOp::InclusiveBefore, 0, std::move(l), std::move(r));
}
inline DftPtr pand(DftPtr x, DftPtr y) { return make(DftOp::Pand, 0, std::move(x), std::move(y)); }
inline DftPtr fdep(DftPtr trigger, DftPtr dependent) {
    return make(DftOp::Fdep, 0, std::move(trigger), std::move(dependent));
}
inline DftPtr wsp(DftPtr main, EventId spare) { return make(DftOp::Wsp, spare, std::move(main), nullptr); }

}  // namespace dft

namespace drbd {

inline DrbdPtr make(DrbdOp op, EventId id, DrbdPtr l, DrbdPtr r, NodeOrigin origin = NodeOrigin::None) {
    return std::make_shared<DrbdExpr>(DrbdExpr{op, id, std::move(l), std::move(r), origin});
}

inline DrbdPtr block(EventId e) { return make(DrbdOp::Block, e, nullptr, nullptr); }
inline DrbdPtr always() { return make(DrbdOp::Always, 0, nullptr, nullptr); }
inline DrbdPtr never() { return make(DrbdOp::Never, 0, nullptr, nullptr); }
inline DrbdPtr gate_and(DrbdPtr l, DrbdPtr r) { return make(DrbdOp::And, 0, std::move(l), std::move(r)); }
inline DrbdPtr gate_or(DrbdPtr l, DrbdPtr r) { return make(DrbdOp::Or, 0, std::move(l), std::move(r)); }
inline DrbdPtr after(DrbdPtr l, DrbdPtr r) { return make(DrbdOp::After, 0, std::move(l), std::move(r)); }
inline DrbdPtr simult(DrbdPtr l, DrbdPtr r) { return make(DrbdOp::Simult, 0, std::move(l), std::move(r)); }
inline DrbdPtr inclusive_after(DrbdPtr l, DrbdPtr r) {
    return make(DrbdOp::InclusiveAfter, 0, std::move(l), std::move(r));
}
inline DrbdPtr wsp(DrbdPtr main, EventId spare) { return make(DrbdOp::Wsp, spare, std::move(main), nullptr); }

}  // namespace drbd

/// Structural equality; ignores display-only origin tags.
bool equal(const DftPtr& a, const DftPtr& b);
bool equal(const DrbdPtr& a, const DrbdPtr& b);

}  // namespace dynrel
