#include "hmsdp.h"

#include <cstring>
#include <new>
#include <string>

#include "json_io.hpp"

struct hmsdp_session {
    hms::RunConfig cfg;
    std::string last_error;
};

namespace {

hmsdp_status status_of(hms::errc code) {
    switch (code) {
        case hms::errc::invalid_argument: return HMSDP_ERR_INVALID_ARGUMENT;
        case hms::errc::nonconvergent_domain: return HMSDP_ERR_NONCONVERGENT;
        case hms::errc::tolerance_unreachable: return HMSDP_ERR_TOLERANCE;
        case hms::errc::degenerate: return HMSDP_ERR_DEGENERATE;
        case hms::errc::ambiguous: return HMSDP_ERR_AMBIGUOUS;
        case hms::errc::unsupported: return HMSDP_ERR_UNSUPPORTED;
        case hms::errc::internal: return HMSDP_ERR_INTERNAL;
    }
    return HMSDP_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, routing failures into the session's error slot.
template <typename Fn>
hmsdp_status guarded(hmsdp_session* s, Fn&& fn) {
    if (!s) return HMSDP_ERR_INVALID_ARGUMENT;
    s->last_error.clear();
    try {
        return fn();
    } catch (const hms::error& e) {
        s->last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return HMSDP_ERR_INTERNAL;
    }
}

template <typename Fn>
hmsdp_status emit_json(hmsdp_session* s, char** out, Fn&& make) {
    if (!out) return HMSDP_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded(s, [&]() {
        const std::string doc = make();
        *out = dup_string(doc);
        if (!*out) {
            s->last_error = "allocation failure";
            return HMSDP_ERR_INTERNAL;
        }
        return HMSDP_OK;
    });
}

}  // namespace

extern "C" {

hmsdp_session* hmsdp_session_new(void) { return new (std::nothrow) hmsdp_session; }

void hmsdp_session_free(hmsdp_session* s) { delete s; }

const char* hmsdp_last_error(const hmsdp_session* s) { return s ? s->last_error.c_str() : ""; }

hmsdp_status hmsdp_set_tolerance(hmsdp_session* s, double tol) {
    return guarded(s, [&]() {
        if (!(tol > 0)) hms::fail(hms::errc::invalid_argument, "tolerance must be positive");
        s->cfg.tolerance = tol;
        return HMSDP_OK;
    });
}

hmsdp_status hmsdp_set_max_terms(hmsdp_session* s, long max_terms) {
    return guarded(s, [&]() {
        if (max_terms < 64) hms::fail(hms::errc::invalid_argument, "term cap below 64");
        s->cfg.max_terms = max_terms;
        return HMSDP_OK;
    });
}

hmsdp_status hmsdp_set_min_window(hmsdp_session* s, long min_window) {
    return guarded(s, [&]() {
        if (min_window < 1) hms::fail(hms::errc::invalid_argument, "window floor below 1");
        s->cfg.min_window = min_window;
        return HMSDP_OK;
    });
}

hmsdp_status hmsdp_set_seed(hmsdp_session* s, unsigned long seed) {
    return guarded(s, [&]() {
        s->cfg.seed = seed;
        return HMSDP_OK;
    });
}

void hmsdp_free(char* text) { delete[] text; }

hmsdp_status hmsdp_verify_json(hmsdp_session* s, const char* kaehler_json, char** out) {
    return emit_json(s, out, [&]() {
        if (!kaehler_json) hms::fail(hms::errc::invalid_argument, "null input document");
        return hms::verify_to_json(hms::parse_kaehler_class(kaehler_json), s->cfg);
    });
}

hmsdp_status hmsdp_tables_json(hmsdp_session* s, const char* kaehler_json, const char* side,
                               char** out) {
    return emit_json(s, out, [&]() {
        if (!kaehler_json) hms::fail(hms::errc::invalid_argument, "null input document");
        return hms::tables_to_json(hms::parse_kaehler_class(kaehler_json),
                                   side ? side : "both", s->cfg);
    });
}

hmsdp_status hmsdp_monodromy_json(hmsdp_session* s, char** out) {
    return emit_json(s, out, [&]() { return hms::monodromy_to_json(); });
}

hmsdp_status hmsdp_oracle_json(hmsdp_session* s, int k, char** out) {
    return emit_json(s, out, [&]() { return hms::oracle_to_json(k, s->cfg); });
}

hmsdp_status hmsdp_degeneracy_json(hmsdp_session* s, const char* kaehler_json, char** out) {
    return emit_json(s, out, [&]() {
        if (!kaehler_json) hms::fail(hms::errc::invalid_argument, "null input document");
        return hms::degeneracy_to_json(hms::parse_kaehler_class(kaehler_json), s->cfg);
    });
}

hmsdp_status hmsdp_theta(hmsdp_session* s, long a_num, long a_den, long b_num, long b_den,
                         double z_re, double z_im, double tau_re, double tau_im, double* out_re,
                         double* out_im, long* terms_used, double* tail_bound) {
    return guarded(s, [&]() {
        if (!out_re || !out_im)
            hms::fail(hms::errc::invalid_argument, "null output pointer");
        const hms::ThetaCharacteristic ch{hms::Fraction(a_num, a_den),
                                          hms::Fraction(b_num, b_den)};
        const hms::SeriesResult r = hms::theta(ch, {z_re, z_im}, {tau_re, tau_im},
                                               s->cfg.tolerance, s->cfg.limits());
        *out_re = r.value.real();
        *out_im = r.value.imag();
        if (terms_used) *terms_used = r.terms_used;
        if (tail_bound) *tail_bound = r.tail_bound;
        return HMSDP_OK;
    });
}

hmsdp_status hmsdp_zeta_triple(hmsdp_session* s, double qx_re, double qx_im, double qf_re,
                               double qf_im, double out[6]) {
    return guarded(s, [&]() {
        if (!out) hms::fail(hms::errc::invalid_argument, "null output pointer");
        const hms::ZetaTriple t = hms::zeta_triple({qx_re, qx_im}, {qf_re, qf_im},
                                                   s->cfg.tolerance, s->cfg.limits());
        out[0] = t.plus.real();
        out[1] = t.plus.imag();
        out[2] = t.minus.real();
        out[3] = t.minus.imag();
        out[4] = t.zero.real();
        out[5] = t.zero.imag();
        return HMSDP_OK;
    });
}

hmsdp_status hmsdp_degeneration_factor(hmsdp_session* s, double qp_re, double qp_im, double qf_re,
                                       double qf_im, double* out_re, double* out_im,
                                       double* normalized_abs) {
    return guarded(s, [&]() {
        if (!out_re || !out_im)
            hms::fail(hms::errc::invalid_argument, "null output pointer");
        double scale = 0.0;
        const hms::SeriesResult r = hms::degeneration_factor(
            {qp_re, qp_im}, {qf_re, qf_im}, s->cfg.tolerance, s->cfg.limits(), &scale);
        *out_re = r.value.real();
        *out_im = r.value.imag();
        if (normalized_abs) *normalized_abs = std::abs(r.value) / std::max(scale, 1e-300);
        return HMSDP_OK;
    });
}

}  // extern "C"
