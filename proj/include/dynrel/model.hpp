#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dynrel/distribution.hpp"
#include "dynrel/error.hpp"
#include "dynrel/expr.hpp"

namespace dynrel {

enum class ModelKind : std::uint8_t { Dft, Drbd };

struct SourceLoc {
    int line = 0;
    int column = 0;
};

/// Declared basic event or spare. For spares `law` is the active-state law
/// and `dormancy` the attenuation factor; dormancy is stored as written so
/// that validation can report out-of-range values as diagnostics.
struct EventDecl {
    std::string name;
    bool is_spare = false;
    Distribution law = Distribution::exponential(1.0);
    double dormancy = 0.0;
    SourceLoc loc;
};

/// Named events plus one top-level structure expression over them.
class Model {
public:
    Model() = default;
    Model(std::string name, ModelKind kind) : name_(std::move(name)), kind_(kind) {}

    const std::string& name() const { return name_; }
    ModelKind kind() const { return kind_; }

    EventId add_basic(std::string name, Distribution law, SourceLoc loc = {});
    EventId add_spare(std::string name, Distribution active, double dormancy, SourceLoc loc = {});

    std::size_t event_count() const { return events_.size(); }
    const EventDecl& event(EventId id) const;
    const std::vector<EventDecl>& events() const { return events_; }
    std::optional<EventId> find_event(const std::string& name) const;

    bool is_spare(EventId id) const { return event(id).is_spare; }
    const Distribution& distribution(EventId id) const;
    SpareSpec spare_spec(EventId id) const;

    void set_top(DftPtr top);
    void set_top(DrbdPtr top);
    const DftPtr& dft_top() const;
    const DrbdPtr& drbd_top() const;
    bool has_top() const { return dft_top_ != nullptr || drbd_top_ != nullptr; }

    /// Uniform draws one scenario consumes: one per ordinary event plus two
    /// per spare (dormant then active), in sampling order.
    std::size_t draws_per_scenario() const;

    /// Structural equality: name, kind, event table, and expression shape.
    bool structurally_equal(const Model& other) const;

private:
    void check_id(EventId id) const;

    std::string name_;
    std::vector<EventDecl> events_;
    ModelKind kind_ = ModelKind::Dft;
    DftPtr dft_top_;
    DrbdPtr drbd_top_;
};

/// Depth-first visit of every node.
template <typename F>
void for_each_node(const DftPtr& e, F&& f) {
    if (!e) return;
    f(*e);
    for_each_node(e->left, f);
    for_each_node(e->right, f);
}

template <typename F>
void for_each_node(const DrbdPtr& e, F&& f) {
    if (!e) return;
    f(*e);
    for_each_node(e->left, f);
    for_each_node(e->right, f);
}

/// Every event id the model's top expression references (with repeats).
std::vector<EventId> referenced_events(const Model& m);

}  // namespace dynrel
