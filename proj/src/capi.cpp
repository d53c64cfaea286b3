#include "rigidity/rigidity.h"

#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/grading.hpp"
#include "rigidity/kostant.hpp"
#include "rigidity/oracle.hpp"
#include "rigidity/paper_tables.hpp"
#include "rigidity/payload.hpp"
#include "rigidity/reps.hpp"
#include "rigidity/table_cache.hpp"

struct rig_session {
    std::optional<std::string> cache_dir;
    rigidity::Limits limits;
};

struct rig_result {
    std::string json;
    bool cache_hit = false;
    bool positive = true;
    std::vector<std::string> warnings;
};

namespace {

using namespace rigidity;

thread_local std::string g_last_error;

rig_status fail(rig_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Owns the per-call store and context and collects what the result reports.
class Call {
public:
    explicit Call(const rig_session& s) {
        ctx.limits = s.limits;
        if (s.cache_dir && !s.cache_dir->empty()) {
            store = std::make_unique<FileTableStore>(*s.cache_dir);
            ctx.store = store.get();
        }
    }

    rig_result* finish(const Json& payload, bool positive = true) {
        auto r = std::make_unique<rig_result>();
        r->json = payload.dump();
        r->positive = positive;
        r->cache_hit = store && ctx.cache_hits > 0 && ctx.cache_misses == 0;
        if (store) r->warnings = store->warnings();
        return r.release();
    }

    ComputeContext ctx;
    std::unique_ptr<FileTableStore> store;
};

std::shared_ptr<const RootSystemData> system_for(const char* diagram) {
    if (!diagram) throw std::invalid_argument("diagram is null");
    return build_root_system(DynkinDiagram::parse(diagram));
}

std::optional<Weight> weight_arg(const int64_t* v, size_t n, const RootSystemData& rs) {
    if (!v || n == 0) return std::nullopt;
    if (n != rs.rank()) {
        throw DomainError("lambda has " + std::to_string(n) + " coordinates but " + rs.diagram().literal() +
                          " has rank " + std::to_string(rs.rank()));
    }
    for (size_t i = 0; i < n; ++i)
        if (v[i] < 0) throw DomainError("lambda coordinate " + std::to_string(i + 1) + " is negative");
    return Weight::from_integers({v, n});
}

Weight require_weight(const int64_t* v, size_t n, const RootSystemData& rs) {
    auto w = weight_arg(v, n, rs);
    if (!w) throw DomainError("lambda is required");
    return *w;
}

std::optional<ParabolicMarking> marking_arg(const int64_t* v, size_t n, const RootSystemData& rs) {
    if (!v || n == 0) return std::nullopt;
    std::vector<std::size_t> nodes;
    for (size_t i = 0; i < n; ++i) {
        if (v[i] < 1 || static_cast<std::size_t>(v[i]) > rs.rank()) {
            throw DomainError("marked node " + std::to_string(v[i]) + " is out of range 1.." +
                              std::to_string(rs.rank()));
        }
        nodes.push_back(static_cast<std::size_t>(v[i] - 1));
    }
    return ParabolicMarking(std::move(nodes), rs.rank());
}

// I = support(λ); an explicit marking must agree with it.
ParabolicMarking marking_for(const Weight& lambda, const std::optional<ParabolicMarking>& given) {
    auto support = ParabolicMarking::support_of(lambda);
    if (given && !(*given == support)) {
        throw DomainError("marked nodes " + given->str() + " differ from the support " + support.str() +
                          " of lambda");
    }
    return support;
}

template <class F>
rig_status guarded(rig_result** out, F&& body) {
    if (!out) return fail(RIG_E_ARGUMENT, "result pointer is null");
    *out = nullptr;
    try {
        *out = body();
        return RIG_OK;
    } catch (const DomainError& e) {
        return fail(RIG_E_DOMAIN, e.what());
    } catch (const ResourceError& e) {
        return fail(RIG_E_RESOURCE, e.what());
    } catch (const InternalError& e) {
        return fail(RIG_E_INTERNAL, std::string("internal check failed: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RIG_E_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RIG_E_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(RIG_E_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* rig_version(void) { return "1.0.0"; }

const char* rig_status_name(rig_status s) {
    switch (s) {
        case RIG_OK: return "ok";
        case RIG_E_ARGUMENT: return "argument";
        case RIG_E_DOMAIN: return "domain";
        case RIG_E_RESOURCE: return "resource";
        case RIG_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* rig_last_error(void) { return g_last_error.c_str(); }

rig_status rig_session_create(rig_session** out) {
    if (!out) return fail(RIG_E_ARGUMENT, "session pointer is null");
    *out = new (std::nothrow) rig_session();
    return *out ? RIG_OK : fail(RIG_E_RESOURCE, "out of memory");
}

void rig_session_destroy(rig_session* s) { delete s; }

rig_status rig_session_set_cache_dir(rig_session* s, const char* path) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    if (path && *path)
        s->cache_dir = path;
    else
        s->cache_dir.reset();
    return RIG_OK;
}

rig_status rig_session_set_weight_cap(rig_session* s, int64_t cap) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    if (cap <= 0) return fail(RIG_E_ARGUMENT, "weight cap must be positive");
    s->limits.max_weight_entries = cap;
    return RIG_OK;
}

rig_status rig_root_system(rig_session* s, const char* diagram, rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        return call.finish(root_system_payload(*system_for(diagram)));
    });
}

rig_status rig_grading(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                       const int64_t* marked, size_t marked_len, rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        const auto rs = system_for(diagram);
        const auto lam = weight_arg(lambda, lambda_len, *rs);
        const auto given = marking_arg(marked, marked_len, *rs);
        if (!lam && !given) throw DomainError("grading needs lambda or marked nodes");
        const auto marking = lam ? marking_for(*lam, given) : *given;
        std::optional<GradingReport> report;
        if (lam) report = module_grading(*lam, marking, *rs, call.ctx);
        return call.finish(grading_payload(*rs, marking, lam, report));
    });
}

rig_status rig_decompose(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                         rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        const auto rs = system_for(diagram);
        const auto lam = require_weight(lambda, lambda_len, *rs);
        const auto tensor = tensor_decompose(lam, dual(lam, *rs), *rs, call.ctx);
        const auto gamma = gperp(lam, *rs, call.ctx);
        return call.finish(decompose_payload(*rs, lam, tensor, gamma));
    });
}

rig_status rig_h1(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                  const int64_t* marked, size_t marked_len, rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        const auto rs = system_for(diagram);
        const auto lam = require_weight(lambda, lambda_len, *rs);
        const auto marking = marking_for(lam, marking_arg(marked, marked_len, *rs));
        const auto comps = h1(gperp(lam, *rs, call.ctx), marking, *rs);
        return call.finish(h1_payload(*rs, lam, marking, comps));
    });
}

rig_status rig_certify(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len, int64_t p,
                       rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        const auto rs = system_for(diagram);
        const auto lam = require_weight(lambda, lambda_len, *rs);
        const auto v = certify(lam, p, *rs, call.ctx);
        return call.finish(certify_payload(*rs, lam, v, quick_vanishing_test(lam, *rs)), v.rigid);
    });
}

rig_status rig_oracle(rig_session* s, const char* diagram, const int64_t* lambda, size_t lambda_len,
                      const char* rep_spec, int64_t d_max, rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        if (!diagram) throw std::invalid_argument("diagram is null");
        const auto alg = build_chevalley(DynkinDiagram::parse(diagram));
        const auto& rs = alg->roots();
        const auto lam = weight_arg(lambda, lambda_len, rs);
        std::optional<RepSpec> spec;
        if (rep_spec && *rep_spec) {
            spec = RepSpec::parse(rep_spec);
        } else if (lam) {
            spec = rep_spec_for_weight(*lam, rs);
            if (!spec) throw DomainError("no matrix model for highest weight " + lam->str() + "; pass a rep spec");
        } else {
            throw DomainError("oracle needs lambda or a rep spec");
        }
        const auto rep = build_rep(*spec, alg);
        if (lam && !(*lam == rep.highest_weight())) {
            throw DomainError("rep " + spec->str() + " has highest weight " + rep.highest_weight().str() +
                              ", not " + lam->str());
        }
        const auto marking = ParabolicMarking::support_of(rep.highest_weight());
        const auto dims = h1_dims(rep, marking, d_max);
        const auto predicted = h1(gperp(rep.highest_weight(), rs, call.ctx), marking, rs);
        const auto payload = oracle_payload(rep, dims, predicted);
        return call.finish(payload, payload["agrees"].get<bool>());
    });
}

rig_status rig_paper_tables(rig_session* s, rig_result** out) {
    if (!s) return fail(RIG_E_ARGUMENT, "session is null");
    return guarded(out, [&] {
        Call call(*s);
        const auto report = run_paper_tables();
        return call.finish(paper_tables_payload(report), report.all_match());
    });
}

const char* rig_result_json(const rig_result* r) { return r ? r->json.c_str() : ""; }
int rig_result_cache_hit(const rig_result* r) { return r && r->cache_hit ? 1 : 0; }
int rig_result_positive(const rig_result* r) { return r && r->positive ? 1 : 0; }
size_t rig_result_warning_count(const rig_result* r) { return r ? r->warnings.size() : 0; }
const char* rig_result_warning(const rig_result* r, size_t i) {
    return r && i < r->warnings.size() ? r->warnings[i].c_str() : nullptr;
}
void rig_result_destroy(rig_result* r) { delete r; }

}  // extern "C"
