#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynrel/error.hpp"
#include "dynrel/expr.hpp"
#include "dynrel/ext_time.hpp"

namespace dynrel {

/// Failure times of a spare in its two states. At most one coordinate is
/// finite in any sampled scenario (the unused one is NEVER); assignments
/// built by hand for algebra tests may carry arbitrary pairs.
struct SpareTimes {
    ExtTime active;
    ExtTime dormant;
};

/// Concrete failure instants for every event an expression references.
/// Ordinary events carry one time; spare events carry an (active, dormant)
/// pair addressed only through wsp nodes.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t event_count)
        : times_(event_count), spares_(event_count) {}

    void set(EventId e, ExtTime t) {
        grow(e);
        times_[e] = t;
    }

    void set_spare(EventId e, SpareTimes st) {
        grow(e);
        spares_[e] = st;
    }

    ExtTime time_of(EventId e) const {
        if (e < times_.size() && times_[e]) return *times_[e];
        if (e < spares_.size() && spares_[e]) {
            throw ModelError("event " + std::to_string(e) +
                             " is a spare; it can only be read through a wsp node");
        }
        throw ModelError("no failure time assigned for event " + std::to_string(e));
    }

    SpareTimes spare_of(EventId e) const {
        if (e < spares_.size() && spares_[e]) return *spares_[e];
        if (e < times_.size() && times_[e]) {
            throw ModelError("event " + std::to_string(e) + " is not a spare");
        }
        throw ModelError("no spare times assigned for event " + std::to_string(e));
    }

    bool has(EventId e) const {
        return (e < times_.size() && times_[e]) || (e < spares_.size() && spares_[e]);
    }

private:
    void grow(EventId e) {
        if (e >= times_.size()) {
            times_.resize(e + 1);
            spares_.resize(e + 1);
        }
    }

    std::vector<std::optional<ExtTime>> times_;
    std::vector<std::optional<SpareTimes>> spares_;
};

}  // namespace dynrel
