#include "dynrel/model.hpp"

namespace dynrel {

EventId Model::add_basic(std::string name, Distribution law, SourceLoc loc) {
    if (find_event(name)) throw ModelError("duplicate event name: " + name);
    events_.push_back(EventDecl{std::move(name), false, law, 0.0, loc});
    return static_cast<EventId>(events_.size() - 1);
}

EventId Model::add_spare(std::string name, Distribution active, double dormancy, SourceLoc loc) {
    if (find_event(name)) throw ModelError("duplicate event name: " + name);
    events_.push_back(EventDecl{std::move(name), true, active, dormancy, loc});
    return static_cast<EventId>(events_.size() - 1);
}

void Model::check_id(EventId id) const {
    if (id >= events_.size()) {
        throw ModelError("unknown event id " + std::to_string(id));
    }
}

const EventDecl& Model::event(EventId id) const {
    check_id(id);
    return events_[id];
}

std::optional<EventId> Model::find_event(const std::string& name) const {
    for (std::size_t i = 0; i < events_.size(); ++i) {
        if (events_[i].name == name) return static_cast<EventId>(i);
    }
    return std::nullopt;
}

const Distribution& Model::distribution(EventId id) const {
    const EventDecl& e = event(id);
    if (e.is_spare) {
        throw ModelError("event " + e.name + " is a spare; it has no single lifetime law");
    }
    return e.law;
}

SpareSpec Model::spare_spec(EventId id) const {
    const EventDecl& e = event(id);
    if (!e.is_spare) throw ModelError("event " + e.name + " is not a spare");
    return SpareSpec(e.law, e.dormancy);
}

void Model::set_top(DftPtr top) {
    if (kind_ != ModelKind::Dft) throw ModelError("cannot attach a fault-tree top to a drbd model");
    dft_top_ = std::move(top);
    drbd_top_ = nullptr;
}

void Model::set_top(DrbdPtr top) {
    if (kind_ != ModelKind::Drbd) throw ModelError("cannot attach a block-diagram top to a dft model");
    drbd_top_ = std::move(top);
    dft_top_ = nullptr;
}

const DftPtr& Model::dft_top() const {
    if (!dft_top_) throw ModelError("model " + name_ + " has no fault-tree top");
    return dft_top_;
}

const DrbdPtr& Model::drbd_top() const {
    if (!drbd_top_) throw ModelError("model " + name_ + " has no block-diagram top");
    return drbd_top_;
}

std::size_t Model::draws_per_scenario() const {
    std::size_t draws = 0;
    for (const EventDecl& e : events_) draws += e.is_spare ? 2 : 1;
    return draws;
}

bool Model::structurally_equal(const Model& other) const {
    if (name_ != other.name_ || kind_ != other.kind_ || events_.size() != other.events_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const EventDecl& a = events_[i];
        const EventDecl& b = other.events_[i];
        if (a.name != b.name || a.is_spare != b.is_spare || !(a.law == b.law) ||
            a.dormancy != b.dormancy) {
            return false;
        }
    }
    if (kind_ == ModelKind::Dft) return equal(dft_top_, other.dft_top_);
    return equal(drbd_top_, other.drbd_top_);
}

std::vector<EventId> referenced_events(const Model& m) {
    std::vector<EventId> ids;
    const auto collect_dft = [&](const DftExpr& n) {
        if (n.op == DftOp::Basic || n.op == DftOp::Wsp) ids.push_back(n.id);
    };
    const auto collect_drbd = [&](const DrbdExpr& n) {
        if (n.op == DrbdOp::Block || n.op == DrbdOp::Wsp) ids.push_back(n.id);
    };
    if (m.kind() == ModelKind::Dft) {
        for_each_node(m.dft_top(), collect_dft);
    } else {
        for_each_node(m.drbd_top(), collect_drbd);
    }
    return ids;
}

}  // namespace dynrel
