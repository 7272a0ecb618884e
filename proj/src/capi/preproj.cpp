#include "preproj/preproj.h"

#include <cstring>
#include <new>
#include <string>

#include "app.hpp"
#include "coxeter.hpp"
#include "module.hpp"
#include "pathalg.hpp"

struct pp_config {
    preproj::app::RunConfig cfg;
};

struct pp_algebra {
    preproj::pathalg::AlgebraPtr alg;
};

struct pp_weyl {
    preproj::coxeter::WeylGroup group;
};

namespace {

thread_local std::string last_error;

template <typename F>
int guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return PP_OK;
    } catch (const preproj::Error& e) {
        last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PP_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int null_argument() {
    last_error = "null argument";
    return PP_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pp_last_error(void) { return last_error.c_str(); }

const char* pp_status_name(int status) {
    if (status == PP_OK) return "Ok";
    if (status < PP_ERR_DIAGONAL_NOT_TWO || status > PP_ERR_INTERNAL) return "Unknown";
    return preproj::error_code_name(static_cast<preproj::ErrorCode>(status));
}

void pp_string_free(char* s) { std::free(s); }

int pp_config_from_file(const char* path, pp_config** out) {
    if (!path || !out) return null_argument();
    return guarded([&] { *out = new pp_config{preproj::app::load_config_file(path)}; });
}

int pp_config_from_string(const char* json, pp_config** out) {
    if (!json || !out) return null_argument();
    return guarded([&] { *out = new pp_config{preproj::app::load_config(json)}; });
}

int pp_config_set_field(pp_config* cfg, const char* spec) {
    if (!cfg || !spec) return null_argument();
    return guarded([&] { cfg->cfg.field = preproj::app::parse_field(spec); });
}

int pp_config_set_cap(pp_config* cfg, uint64_t cap) {
    if (!cfg) return null_argument();
    if (cap == 0) {
        last_error = "cap must be positive";
        return PP_ERR_VALIDATION;
    }
    cfg->cfg.cap = static_cast<size_t>(cap);
    return PP_OK;
}

int pp_config_set_seed(pp_config* cfg, uint64_t seed) {
    if (!cfg) return null_argument();
    cfg->cfg.seed = seed;
    return PP_OK;
}

int pp_config_rank(const pp_config* cfg) { return cfg ? cfg->cfg.data.n() : 0; }

int pp_config_symmetrizer(const pp_config* cfg, int i, int64_t* out) {
    if (!cfg || !out) return null_argument();
    if (i < 0 || i >= cfg->cfg.data.n()) {
        last_error = "vertex out of range";
        return PP_ERR_INVALID_ARGUMENT;
    }
    *out = cfg->cfg.data.c(i);
    return PP_OK;
}

int pp_config_is_dynkin(const pp_config* cfg) {
    return cfg && preproj::cartan::is_dynkin(cfg->cfg.data.cartan, cfg->cfg.data.symmetrizer) ? 1 : 0;
}

void pp_config_free(pp_config* cfg) { delete cfg; }

int pp_algebra_build(const pp_config* cfg, pp_algebra** out) {
    if (!cfg || !out) return null_argument();
    return guarded([&] { *out = new pp_algebra{preproj::pathalg::Algebra::build(cfg->cfg.data, cfg->cfg.field)}; });
}

size_t pp_algebra_dim(const pp_algebra* a) { return a ? a->alg->dim() : 0; }

size_t pp_algebra_projective_dim(const pp_algebra* a, int i) {
    if (!a || i < 0 || i >= a->alg->n()) return 0;
    size_t s = 0;
    for (int j = 0; j < a->alg->n(); ++j) s += a->alg->block(i, j).size();
    return s;
}

int pp_algebra_nakayama(const pp_algebra* a, int i, int* out) {
    if (!a || !out) return null_argument();
    if (i < 0 || i >= a->alg->n()) {
        last_error = "vertex out of range";
        return PP_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = preproj::repmod::nakayama_permutation(a->alg)[i]; });
}

void pp_algebra_free(pp_algebra* a) { delete a; }

int pp_weyl_enumerate(const pp_config* cfg, pp_weyl** out) {
    if (!cfg || !out) return null_argument();
    return guarded([&] {
        *out = new pp_weyl{preproj::coxeter::WeylGroup::enumerate(cfg->cfg.data.cartan, cfg->cfg.cap)};
    });
}

size_t pp_weyl_order(const pp_weyl* w) { return w ? w->group.size() : 0; }
int pp_weyl_complete(const pp_weyl* w) { return w && w->group.complete() ? 1 : 0; }
int pp_weyl_longest_length(const pp_weyl* w) { return w ? w->group.max_length() : 0; }
void pp_weyl_free(pp_weyl* w) { delete w; }

int pp_run_command(const pp_config* cfg, const char* command, unsigned flags, char** out, char** err,
                   int* exit_code) {
    if (!cfg || !command || !out || !err || !exit_code) return null_argument();
    return guarded([&] {
        preproj::app::OutputOptions opts;
        opts.json = flags & PP_OUT_JSON;
        opts.dot = flags & PP_OUT_DOT;
        opts.basis = flags & PP_OUT_BASIS;
        preproj::app::CommandResult r = preproj::app::run_command(cfg->cfg, command, opts);
        *exit_code = r.exit_code;
        *out = copy_string(r.out);
        *err = copy_string(r.err);
    });
}

}  // extern "C"
