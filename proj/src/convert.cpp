#include "dynrel/convert.hpp"

#include <cmath>

namespace dynrel {

DrbdPtr dft_to_drbd(const DftPtr& e) {
    if (!e) return nullptr;
    switch (e->op) {
        case DftOp::Basic:
            return drbd::block(e->id);
        case DftOp::Always:
            return drbd::always();
        case DftOp::Never:
            return drbd::never();
        case DftOp::And:
            return drbd::gate_or(dft_to_drbd(e->left), dft_to_drbd(e->right));
        case DftOp::Or:
            return drbd::gate_and(dft_to_drbd(e->left), dft_to_drbd(e->right));
        case DftOp::Fdep:
            // Trigger role survives only as a display tag; the semantics is
            // the same series min.
            return drbd::make(DrbdOp::And, 0, dft_to_drbd(e->left), dft_to_drbd(e->right),
                              NodeOrigin::FdepTrigger);
        case DftOp::Pand:
            return drbd::inclusive_after(dft_to_drbd(e->right), dft_to_drbd(e->left));
        case DftOp::Wsp:
            return drbd::wsp(dft_to_drbd(e->left), e->id);
        case DftOp::Before:
        case DftOp::Simult:
        case DftOp::InclusiveBefore:
            throw NoEquivalenceError(
                "dft_to_drbd: bare temporal operators have no block-diagram equivalence rule");
    }
    throw ModelError("dft_to_drbd: unknown node");
}

DftPtr drbd_to_dft(const DrbdPtr& e) {
    if (!e) return nullptr;
    switch (e->op) {
        case DrbdOp::Block:
            return dft::basic(e->id);
        case DrbdOp::Always:
            return dft::always();
        case DrbdOp::Never:
            return dft::never();
        case DrbdOp::And:
            return dft::gate_or(drbd_to_dft(e->left), drbd_to_dft(e->right));
        case DrbdOp::Or:
            return dft::gate_and(drbd_to_dft(e->left), drbd_to_dft(e->right));
        case DrbdOp::InclusiveAfter:
            return dft::pand(drbd_to_dft(e->right), drbd_to_dft(e->left));
        case DrbdOp::Wsp:
            return dft::wsp(drbd_to_dft(e->left), e->id);
        case DrbdOp::After:
        case DrbdOp::Simult:
            throw NoEquivalenceError(
                "drbd_to_dft: bare temporal operators have no fault-tree equivalence rule");
    }
    throw ModelError("drbd_to_dft: unknown node");
}

Model convert_model(const Model& m) {
    Model out(m.name(), m.kind() == ModelKind::Dft ? ModelKind::Drbd : ModelKind::Dft);
    for (const EventDecl& e : m.events()) {
        if (e.is_spare) {
            out.add_spare(e.name, e.law, e.dormancy, e.loc);
        } else {
            out.add_basic(e.name, e.law, e.loc);
        }
    }
    if (m.kind() == ModelKind::Dft) {
        out.set_top(dft_to_drbd(m.dft_top()));
    } else {
        out.set_top(drbd_to_dft(m.drbd_top()));
    }
    return out;
}

ComplementReport complement_report(const Model& m, double t, const AnalyticOptions& opts) {
    const bool is_dft = m.kind() == ModelKind::Dft;
    const Model converted = convert_model(m);
    const Model& dft_model = is_dft ? m : converted;
    const Model& drbd_model = is_dft ? converted : m;

    ComplementReport report;
    std::string dft_failure;
    std::string drbd_failure;

    try {
        const AnalysisResult r = analyze_dft(dft_model, t, opts);
        report.unreliability_dft = r.value;
        report.error_bound += r.error_bound;
        report.dft_direct = true;
    } catch (const UnsupportedStructureError& err) {
        dft_failure = err.what();
    }
    try {
        const AnalysisResult r = analyze_drbd(drbd_model, t, opts);
        report.reliability_drbd = r.value;
        report.error_bound += r.error_bound;
        report.drbd_direct = true;
    } catch (const UnsupportedStructureError& err) {
        drbd_failure = err.what();
    }

    if (!report.dft_direct && !report.drbd_direct) {
        throw UnsupportedStructureError("complement_report: neither route supports the model; "
                                        "fault-tree route: " +
                                        dft_failure + "; block-diagram route: " + drbd_failure);
    }
    if (!report.dft_direct) report.unreliability_dft = 1.0 - report.reliability_drbd;
    if (!report.drbd_direct) report.reliability_drbd = 1.0 - report.unreliability_dft;

    report.residual = std::abs(1.0 - (report.unreliability_dft + report.reliability_drbd));
    return report;
}

}  // namespace dynrel
