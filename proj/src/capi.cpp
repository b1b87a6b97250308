#include "ihc/ihc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ihc/debug.hpp"
#include "ihc/report.hpp"

struct ihc_space {
  ihc::SpaceDocument doc;
};

namespace {

thread_local std::string last_error;
thread_local int last_iso = 0;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
ihc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ihc::InputError& e) {
    last_error = e.what();
    return IHC_ERR_INPUT;
  } catch (const ihc::PreconditionError& e) {
    last_error = e.what();
    return IHC_ERR_PRECONDITION;
  } catch (const ihc::PropertyError& e) {
    last_error = e.what();
    return IHC_ERR_PROPERTY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IHC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return IHC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ihc::InputError(std::string("null argument: ") + what);
}

ihc::Perversity perversity_for(const ihc_space* s, const char* spec) {
  std::string text = spec ? spec : "";
  if (text.empty()) text = s->doc.perversity.value_or("zero");
  return ihc::Perversity::parse(s->doc.complex, text);
}

ihc::Ring ring_for(const char* spec) { return ihc::Ring::parse(spec && *spec ? spec : "q"); }

ihc_status emit(ihc_space** out, ihc::SpaceDocument doc) {
  *out = new ihc_space{std::move(doc)};
  return IHC_OK;
}

}  // namespace

extern "C" {

const char* ihc_version(void) { return "1.0.0"; }

const char* ihc_last_error(void) { return last_error.c_str(); }

void ihc_string_free(char* s) { std::free(s); }

ihc_status ihc_space_load_text(const char* text, ihc_space** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    return emit(out, ihc::load_space(text));
  });
}

ihc_status ihc_space_load_file(const char* path, ihc_space** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    return emit(out, ihc::load_space_file(path));
  });
}

ihc_status ihc_space_fixture(const char* name, ihc_space** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    return emit(out, ihc::SpaceDocument{ihc::fixtures::by_name(name), std::nullopt});
  });
}

ihc_status ihc_space_recode(const ihc_space* space, const char* map, ihc_space** out) {
  return guarded([&] {
    require(space, "space");
    require(map, "map");
    require(out, "out");
    const auto r = ihc::WeightRecoding::parse(map, space->doc.complex.n());
    return emit(out, ihc::SpaceDocument{space->doc.complex.recoded(r.phi, r.n_coarse), std::nullopt});
  });
}

void ihc_space_free(ihc_space* space) { delete space; }

int ihc_space_dimension(const ihc_space* space) { return space ? space->doc.complex.n() : -1; }

size_t ihc_space_vertex_count(const ihc_space* space) { return space ? space->doc.complex.vertex_count() : 0; }

size_t ihc_space_stratum_count(const ihc_space* space) { return space ? space->doc.complex.strata().size() : 0; }

ihc_status ihc_space_text(const ihc_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = copy_out(space->doc.complex.to_text());
    return IHC_OK;
  });
}

ihc_status ihc_cohomology(const ihc_space* space, const char* perversity, const char* ring, int json, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const auto& cx = space->doc.complex;
    const auto p = perversity_for(space, perversity);
    const auto r = ring_for(ring);
    const ihc::BlowupComplex b(cx);
    const auto groups = ihc::homology_all(ihc::intersection_subcomplex(b, p, r));
    *out = copy_out(ihc::render_groups(cx, "cohomology", p, r, groups, false, json != 0));
    return IHC_OK;
  });
}

ihc_status ihc_tame_homology(const ihc_space* space, const char* perversity, const char* ring, int json,
                             char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const auto& cx = space->doc.complex;
    const auto p = perversity_for(space, perversity);
    const auto r = ring_for(ring);
    const auto groups = ihc::homology_all(ihc::tame_complex(cx, p, r));
    *out = copy_out(ihc::render_groups(cx, "tame-homology", p, r, groups, true, json != 0));
    return IHC_OK;
  });
}

ihc_status ihc_compare(const ihc_space* space, const char* mode, const char* perversity, const char* ring,
                       const char* recode, int json, char** out) {
  return guarded([&] {
    require(space, "space");
    require(mode, "mode");
    require(out, "out");
    const auto m = ihc::parse_compare_mode(mode);
    const auto r = ring_for(ring);
    ihc::ComparisonReport report;
    std::optional<ihc::Perversity> p;
    if (m == ihc::CompareMode::Refinement) {
      if (!recode || !*recode) throw ihc::InputError("refinement comparison needs --recode");
      const auto& fine = space->doc.complex;
      const auto rec = ihc::WeightRecoding::parse(recode, fine.n());
      const auto coarse = fine.recoded(rec.phi, rec.n_coarse);
      p = ihc::Perversity::parse(coarse, perversity && *perversity ? perversity : "zero");
      report = ihc::compare_refinement(fine, rec, *p, r);
    } else {
      if (recode && *recode) throw ihc::InputError("--recode only applies to the refinement comparison");
      p = perversity_for(space, perversity);
      report = ihc::compare(space->doc.complex, m, *p, r);
    }
    last_iso = report.all_iso() ? 1 : 0;
    *out = copy_out(ihc::render_comparison(report, *p, r, json != 0));
    return IHC_OK;
  });
}

int ihc_last_compare_iso(void) { return last_iso; }

ihc_status ihc_strata(const ihc_space* space, int json, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = copy_out(ihc::render_strata(space->doc.complex, json != 0));
    return IHC_OK;
  });
}

ihc_status ihc_export_complex(const ihc_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = copy_out(ihc::render_complex(space->doc.complex));
    return IHC_OK;
  });
}

ihc_status ihc_export_differential(const ihc_space* space, int degree, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const ihc::BlowupComplex b(space->doc.complex);
    if (degree < 0 || degree > b.top()) throw ihc::InputError("degree out of range: " + std::to_string(degree));
    *out = copy_out(ihc::to_triplets(b.differential_matrix(degree)));
    return IHC_OK;
  });
}

ihc_status ihc_verify(const char* suite, size_t samples, unsigned long long seed, int json, char** out) {
  return guarded([&] {
    require(out, "out");
    ihc::VerifyOptions options;
    if (samples > 0) options.samples = samples;
    options.seed = seed;
    const auto results = ihc::verify(suite && *suite ? suite : "all", options);
    *out = copy_out(ihc::render_verify(results, json != 0));
    for (const auto& r : results)
      if (!r.pass) return IHC_ERR_PROPERTY;
    return IHC_OK;
  });
}

ihc_status ihc_fixture_names(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string names;
    for (const auto& f : ihc::fixtures::corpus()) names += f.name + "\n";
    *out = copy_out(names);
    return IHC_OK;
  });
}

void ihc_debug_sign_flip(int on) { ihc::debug::set_sign_flip(on != 0); }

ihc_status ihc_request_roundtrip(const char* request_json, char** out) {
  return guarded([&] {
    require(request_json, "request");
    require(out, "out");
    *out = copy_out(ihc::RunRequest::from_json(request_json).to_json());
    return IHC_OK;
  });
}

}  // extern "C"
