#include "matchedkit.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <sstream>
#include <string>

#include "alexander.hpp"
#include "catalog.hpp"
#include "chord.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "knot.hpp"
#include "rational.hpp"
#include "render.hpp"

struct mk_chord_diagram {
    mk::ChordDiagram d;
};
struct mk_knot_diagram {
    mk::KnotDiagram k;
};
struct mk_tangle {
    mk::TanglePresentation t;
};
struct mk_ideal {
    mk::Ideal i;
};

namespace {

thread_local std::string t_last_error;

void apply_env_work_limit() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (const char* v = std::getenv("MATCHEDKIT_WORK_LIMIT")) {
            char* end = nullptr;
            long long lim = std::strtoll(v, &end, 10);
            if (end && *end == '\0' && lim > 0) mk::Ideal::set_work_limit(lim);
        }
    });
}

int code_of(mk::ErrorKind k) {
    switch (k) {
        case mk::ErrorKind::Parse: return MK_ERR_PARSE;
        case mk::ErrorKind::Domain: return MK_ERR_DOMAIN;
        case mk::ErrorKind::WorkLimit: return MK_ERR_WORK_LIMIT;
        case mk::ErrorKind::Internal: return MK_ERR_INTERNAL;
    }
    return MK_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
    apply_env_work_limit();
    try {
        f();
        return MK_OK;
    } catch (const mk::Error& e) {
        t_last_error = e.what();
        return code_of(e.kind());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return MK_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

int require(bool cond, const char* msg) {
    if (!cond) {
        t_last_error = msg;
        return MK_ERR_DOMAIN;
    }
    return MK_OK;
}

std::string join_lines(const std::vector<mk::LaurentPoly>& polys) {
    std::ostringstream os;
    for (size_t i = 0; i < polys.size(); i++) os << polys[i].to_string() << "\n";
    return os.str();
}

}  // namespace

extern "C" {

const char* mk_last_error(void) { return t_last_error.c_str(); }

void mk_string_free(char* s) { std::free(s); }

int mk_set_work_limit(long long steps) {
    return guarded([&] { mk::Ideal::set_work_limit(steps); });
}

/* ---- chord diagrams ---- */

int mk_cd_parse(const char* text, mk_chord_diagram** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_chord_diagram{mk::ChordDiagram::parse(text)}; });
}

void mk_cd_free(mk_chord_diagram* d) { delete d; }

int mk_cd_serialize(const mk_chord_diagram* d, char** out) {
    if (int rc = require(d && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(d->d.serialize()); });
}

int mk_cd_chord_count(const mk_chord_diagram* d, int* out) {
    if (int rc = require(d && out, "null argument")) return rc;
    *out = d->d.n();
    return MK_OK;
}

int mk_cd_is_trivial_diagram(const mk_chord_diagram* d, int* out) {
    if (int rc = require(d && out, "null argument")) return rc;
    *out = d->d.is_trivial_diagram() ? 1 : 0;
    return MK_OK;
}

int mk_cd_graph_dot(const mk_chord_diagram* d, char** out) {
    if (int rc = require(d && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(mk::graph_dot(d->d)); });
}

int mk_cd_render_svg(const mk_chord_diagram* d, char** out) {
    if (int rc = require(d && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(mk::render_svg(d->d)); });
}

int mk_cd_to_knot(const mk_chord_diagram* d, mk_knot_diagram** out) {
    if (int rc = require(d && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_knot_diagram{mk::chord_to_knot(d->d)}; });
}

int mk_cd_elementary_ideal(const mk_chord_diagram* d, int k, mk_ideal** out) {
    if (int rc = require(d && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new mk_ideal{mk::elementary_ideal(mk::build_matrix_stencil(d->d), k)}; });
}

int mk_cd_alexander(const mk_chord_diagram* d, char** poly_text) {
    if (int rc = require(d && poly_text, "null argument")) return rc;
    return guarded([&] {
        *poly_text =
            dup_string(mk::alexander_polynomial(mk::build_matrix_stencil(d->d)).to_string());
    });
}

int mk_cd_support_chords(const mk_chord_diagram* d, char** ids) {
    if (int rc = require(d && ids, "null argument")) return rc;
    return guarded([&] {
        auto v = mk::support_chords(d->d);
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); i++) os << (i ? " " : "") << v[i];
        *ids = dup_string(os.str());
    });
}

int mk_cd_theorem1(const mk_chord_diagram* d, int k, int* trivial, int* contains_t_plus_1) {
    if (int rc = require(d && trivial && contains_t_plus_1, "null argument")) return rc;
    return guarded([&] {
        auto r = mk::theorem1_check(d->d, k);
        *trivial = r.trivial ? 1 : 0;
        *contains_t_plus_1 = r.contains_t_plus_1 ? 1 : 0;
    });
}

int mk_cd_oracle_check(const mk_chord_diagram* d, int* agree) {
    if (int rc = require(d && agree, "null argument")) return rc;
    return guarded([&] {
        auto stencil = mk::build_matrix_stencil(d->d);
        auto wirtinger = mk::build_matrix_wirtinger(mk::chord_to_knot(d->d));
        *agree = 1;
        for (int m = 1; m <= 3; m++) {
            if (!mk::elementary_ideal(stencil, m).equals(mk::elementary_ideal(wirtinger, m))) {
                *agree = 0;
                break;
            }
        }
    });
}

/* ---- knot diagrams and tangles ---- */

int mk_kd_parse(const char* text, mk_knot_diagram** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_knot_diagram{mk::KnotDiagram::parse(text)}; });
}

void mk_kd_free(mk_knot_diagram* k) { delete k; }

int mk_kd_serialize(const mk_knot_diagram* k, char** out) {
    if (int rc = require(k && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(k->k.serialize()); });
}

int mk_kd_crossing_count(const mk_knot_diagram* k, int* out) {
    if (int rc = require(k && out, "null argument")) return rc;
    *out = (int)k->k.crossings().size();
    return MK_OK;
}

int mk_kd_mirror(const mk_knot_diagram* k, mk_knot_diagram** out) {
    if (int rc = require(k && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_knot_diagram{k->k.mirror()}; });
}

int mk_kd_elementary_ideal(const mk_knot_diagram* k, int m, mk_ideal** out) {
    if (int rc = require(k && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new mk_ideal{mk::elementary_ideal(mk::build_matrix_wirtinger(k->k), m)}; });
}

int mk_kd_alexander(const mk_knot_diagram* k, char** poly_text) {
    if (int rc = require(k && poly_text, "null argument")) return rc;
    return guarded([&] {
        *poly_text =
            dup_string(mk::alexander_polynomial(mk::build_matrix_wirtinger(k->k)).to_string());
    });
}

int mk_kd_cut(const mk_knot_diagram* k, const char* arcs_csv, mk_tangle** out) {
    if (int rc = require(k && arcs_csv && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_tangle{mk::cut_to_tangle(k->k, split_csv(arcs_csv))}; });
}

int mk_tangle_parse(const char* text, mk_tangle** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guarded([&] { *out = new mk_tangle{mk::parse_tangle(text)}; });
}

void mk_tangle_free(mk_tangle* t) { delete t; }

int mk_tangle_serialize(const mk_tangle* t, char** out) {
    if (int rc = require(t && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(mk::serialize_tangle(t->t)); });
}

int mk_tangle_duplicate(const mk_tangle* t, const char* params_csv, mk_knot_diagram** out) {
    if (int rc = require(t && params_csv && out, "null argument")) return rc;
    return guarded([&] {
        std::vector<int> params;
        for (auto& tok : split_csv(params_csv)) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                mk::fail_domain("bad twist parameter '" + tok + "'");
            }
            if (used != tok.size()) mk::fail_domain("bad twist parameter '" + tok + "'");
            params.push_back(v);
        }
        *out = new mk_knot_diagram{mk::duplicate(t->t, params)};
    });
}

/* ---- ideals ---- */

void mk_ideal_free(mk_ideal* i) { delete i; }

int mk_ideal_is_trivial(const mk_ideal* i, int* out) {
    if (int rc = require(i && out, "null argument")) return rc;
    *out = i->i.is_trivial() ? 1 : 0;
    return MK_OK;
}

int mk_ideal_is_zero(const mk_ideal* i, int* out) {
    if (int rc = require(i && out, "null argument")) return rc;
    *out = i->i.is_zero() ? 1 : 0;
    return MK_OK;
}

int mk_ideal_contains(const mk_ideal* i, const char* poly_text, int* out) {
    if (int rc = require(i && poly_text && out, "null argument")) return rc;
    return guarded(
        [&] { *out = i->i.contains(mk::LaurentPoly::parse(poly_text)) ? 1 : 0; });
}

int mk_ideal_equal(const mk_ideal* i, const mk_ideal* j, int* out) {
    if (int rc = require(i && j && out, "null argument")) return rc;
    return guarded([&] { *out = i->i.equals(j->i) ? 1 : 0; });
}

int mk_ideal_generators(const mk_ideal* i, char** out) {
    if (int rc = require(i && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(join_lines(i->i.generators())); });
}

int mk_ideal_basis(const mk_ideal* i, char** out) {
    if (int rc = require(i && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(join_lines(i->i.basis())); });
}

/* ---- rational knots ---- */

int mk_even_cf(long long p, long long q, char** terms) {
    if (int rc = require(terms != nullptr, "null argument")) return rc;
    return guarded([&] {
        auto cf = mk::even_cf(p, q);
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < cf.terms.size(); i++) os << (i ? ", " : "") << cf.terms[i];
        os << "]";
        *terms = dup_string(os.str());
    });
}

int mk_rational_diagram(long long p, long long q, mk_chord_diagram** out, char** support_id) {
    if (int rc = require(out && support_id, "null argument")) return rc;
    return guarded([&] {
        auto rd = mk::rational_diagram(mk::even_cf(p, q));
        *out = new mk_chord_diagram{std::move(rd.diagram)};
        *support_id = dup_string(rd.support_id);
    });
}

/* ---- catalog ---- */

int mk_catalog_get(const char* name, char** kind, char** payload, char** provenance) {
    if (int rc = require(name && kind && payload && provenance, "null argument")) return rc;
    return guarded([&] {
        auto e = mk::catalog_get(name);
        *kind = dup_string(e.is_chord() ? "chord" : e.is_knot() ? "knot" : "tangle");
        *payload = dup_string(e.serialize_payload());
        *provenance = dup_string(e.provenance);
    });
}

int mk_catalog_names(char** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] {
        std::ostringstream os;
        for (auto& n : mk::catalog_names()) os << n << "\n";
        *out = dup_string(os.str());
    });
}

}  // extern "C"
