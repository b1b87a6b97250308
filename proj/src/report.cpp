#include "ihc/report.hpp"

#include <sstream>

#include <json.hpp>

namespace ihc {

using nlohmann::ordered_json;

namespace {

ordered_json header(const std::string& kind) {
  ordered_json j;
  j["schema"] = "ihc-report";
  j["version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

ordered_json group_json(const HomologyGroup& h) {
  ordered_json j;
  j["degree"] = h.degree;
  j["rank"] = h.free_rank;
  ordered_json t = ordered_json::array();
  for (const auto& x : h.torsion) t.push_back(x.get_str());
  j["torsion"] = t;
  j["group"] = h.to_string();
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json strata_json(const WeightedComplex& cx) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : cx.strata()) {
    ordered_json j;
    j["id"] = s.id;
    j["index"] = s.index;
    j["codim"] = s.codim;
    ordered_json vs = ordered_json::array();
    for (Vertex v : s.vertices) vs.push_back(cx.name(v));
    j["vertices"] = vs;
    j["simplices"] = s.simplices.size();
    arr.push_back(j);
  }
  return arr;
}

}  // namespace

std::string RunRequest::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["space"] = space;
  j["perversity"] = perversity;
  j["ring"] = ring;
  j["recoding"] = recoding ? ordered_json(*recoding) : ordered_json(nullptr);
  j["format"] = json ? "json" : "table";
  return j.dump();
}

RunRequest RunRequest::from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    RunRequest r;
    r.command = j.at("command").get<std::string>();
    r.space = j.at("space").get<std::string>();
    r.perversity = j.at("perversity").get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    if (!j.at("recoding").is_null()) r.recoding = j.at("recoding").get<std::string>();
    const std::string format = j.at("format").get<std::string>();
    if (format != "json" && format != "table") throw InputError("unknown output format: " + format);
    r.json = format == "json";
    return r;
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("malformed run request: ") + e.what());
  }
}

std::string format_groups(const std::vector<HomologyGroup>& groups, bool chains) {
  std::string out;
  for (const auto& h : groups) {
    if (!out.empty()) out += ", ";
    out += std::string(chains ? "H_" : "H^") + std::to_string(h.degree) + "=" + h.to_string();
  }
  return out;
}

std::string render_groups(const WeightedComplex& cx, const std::string& kind, const Perversity& p, const Ring& ring,
                          const std::vector<HomologyGroup>& groups, bool chains, bool json) {
  if (!json) return format_groups(groups, chains) + "\n";
  ordered_json j = header(kind);
  j["ring"] = ring.spec();
  j["perversity"] = p.to_string();
  j["formal_dimension"] = cx.n();
  ordered_json arr = ordered_json::array();
  for (const auto& h : groups) arr.push_back(group_json(h));
  j["groups"] = arr;
  return dump(j);
}

std::string render_comparison(const ComparisonReport& report, const Perversity& p, const Ring& ring, bool json) {
  if (!json) {
    std::ostringstream out;
    out << to_string(report.mode) << ": " << report.source_name << " -> " << report.target_name << " over "
        << ring.name() << ", " << p.to_string() << '\n';
    for (const auto& d : report.degrees)
      out << "  k=" << d.degree << "  " << d.source.to_string() << " -> " << d.target.to_string() << "  rank "
          << d.rank << "  " << (d.iso ? "iso" : "not iso") << '\n';
    out << (report.all_iso() ? "isomorphism in every degree" : "not an isomorphism") << '\n';
    return out.str();
  }
  ordered_json j = header("comparison");
  j["mode"] = to_string(report.mode);
  j["ring"] = ring.spec();
  j["perversity"] = p.to_string();
  j["source"] = report.source_name;
  j["target"] = report.target_name;
  ordered_json arr = ordered_json::array();
  for (const auto& d : report.degrees) {
    ordered_json e;
    e["degree"] = d.degree;
    e["source"] = group_json(d.source);
    e["target"] = group_json(d.target);
    e["rank"] = d.rank;
    e["iso"] = d.iso;
    arr.push_back(e);
  }
  j["degrees"] = arr;
  j["iso"] = report.all_iso();
  return dump(j);
}

std::string render_verify(const std::vector<PropertyResult>& results, bool json) {
  if (!json) {
    std::ostringstream out;
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (" << r.checked << " checks)\n";
      if (!r.pass) out << "  counterexample: " << r.counterexample << '\n';
    }
    return out.str();
  }
  ordered_json j = header("verify");
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    ordered_json e;
    e["suite"] = r.suite;
    e["property"] = r.name;
    e["pass"] = r.pass;
    e["checked"] = r.checked;
    e["counterexample"] = r.pass ? ordered_json(nullptr) : ordered_json(r.counterexample);
    arr.push_back(e);
    all = all && r.pass;
  }
  j["results"] = arr;
  j["pass"] = all;
  return dump(j);
}

std::string render_strata(const WeightedComplex& cx, bool json) {
  if (json) {
    ordered_json j = header("strata");
    j["strata"] = strata_json(cx);
    return dump(j);
  }
  std::ostringstream out;
  for (const auto& s : cx.strata()) {
    out << "stratum " << s.id << ": index " << s.index << ", codim " << s.codim << (s.singular() ? "" : " (regular)")
        << ", vertices";
    for (Vertex v : s.vertices) out << ' ' << cx.name(v);
    out << ", " << s.simplices.size() << " simplices\n";
  }
  return out.str();
}

std::string render_complex(const WeightedComplex& cx) {
  ordered_json j = header("complex");
  j["formal_dimension"] = cx.n();
  ordered_json vs = ordered_json::array();
  for (Vertex v = 0; v < static_cast<Vertex>(cx.vertex_count()); ++v)
    vs.push_back(ordered_json{{"name", cx.name(v)}, {"weight", cx.weight(v)}});
  j["vertices"] = vs;
  ordered_json fs = ordered_json::array();
  for (const auto& f : cx.facets()) {
    ordered_json names = ordered_json::array();
    for (Vertex v : f) names.push_back(cx.name(v));
    fs.push_back(names);
  }
  j["facets"] = fs;
  j["strata"] = strata_json(cx);
  return dump(j);
}

}  // namespace ihc
