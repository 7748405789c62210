#include "trimaps/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trimaps/census.hpp"
#include "trimaps/constructions.hpp"
#include "trimaps/gf2field.hpp"
#include "trimaps/map_io.hpp"

namespace trimaps::cli {

namespace {

using nlohmann::json;

enum class Format { kTable, kJson };

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One "key: value" line per field; lists of records print one record per line.
void print_table(std::ostream& out, const json& value) {
  if (value.is_object()) {
    std::size_t width = 0;
    for (const auto& [key, v] : value.items()) width = std::max(width, key.size());
    for (const auto& [key, v] : value.items()) {
      out << key << std::string(width - key.size() + 2, ' ') << scalar_text(v) << '\n';
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_object()) {
        std::string line;
        for (const auto& [key, v] : item.items()) line += (line.empty() ? "" : "  ") + key + "=" + scalar_text(v);
        out << line << '\n';
      } else {
        out << scalar_text(item) << '\n';
      }
    }
  } else {
    out << scalar_text(value) << '\n';
  }
}

void emit(std::ostream& out, Format format, const json& value) {
  if (format == Format::kJson) {
    out << value.dump(2) << '\n';
  } else {
    print_table(out, value);
  }
}

json type_json(const MapType& t) { return {t.p, t.q, t.r}; }

json invariants_json(const InvariantsReport& r) {
  return {{"degree", r.degree},
          {"type", type_json(r.type)},
          {"V", r.counts.vertices},
          {"E", r.counts.edges},
          {"F", r.counts.faces},
          {"Pe", r.counts.petrie_polygons},
          {"chi", r.chi},
          {"orientable", r.orientable},
          {"genus", r.genus},
          {"mV", r.multiplicities.vertex},
          {"mF", r.multiplicities.face},
          {"vertex_loop", r.multiplicities.vertex_loop},
          {"face_loop", r.multiplicities.face_loop}};
}

json classification_json(const ClassificationReport& r) {
  json partition = json::array();
  for (const auto& part : r.partition) {
    json names = json::array();
    for (const Sigma s : part) names.push_back(sigma_name(s));
    partition.push_back(names);
  }
  return {{"class", wilson_class_name(r.wilson_class)}, {"derivates", r.derivate_count}, {"partition", partition}};
}

std::filesystem::path sidecar_path(const std::filesystem::path& map_path) {
  std::filesystem::path p = map_path;
  p.replace_extension(".provenance.json");
  return p;
}

MapType parse_type(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoull(item, &used));
      require(used == item.size(), "");
    } catch (const std::exception&) {
      throw DomainError("bad type '" + text + "', expected p,q,r");
    }
  }
  require(values.size() == 3, "type must be three integers p,q,r");
  return {values[0], values[1], values[2]};
}

// "klein", "l2p:13", "sn:5", "an:9:A".
ConstructionRecord base_record(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  require(!parts.empty(), "empty base spec");
  auto number = [&](std::size_t i) -> unsigned {
    require(parts.size() > i, "base spec '" + spec + "' lacks a parameter");
    try {
      return static_cast<unsigned>(std::stoul(parts[i]));
    } catch (const std::exception&) {
      throw DomainError("bad number in base spec '" + spec + "'");
    }
  };
  if (parts[0] == "klein") return build_klein_map();
  if (parts[0] == "l2p") return build_l2p_map(number(1));
  if (parts[0] == "sn") return build_sn_map(number(1));
  if (parts[0] == "an") {
    require(parts.size() == 3 && (parts[2] == "A" || parts[2] == "B"), "an base spec is an:<n>:A or an:<n>:B");
    return build_an_map(number(1), parts[2] == "A" ? AnVariant::kA : AnVariant::kB);
  }
  throw DomainError("unknown base '" + spec + "'");
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Regular maps under Wilson's operations: constructions, invariants, classification, census"};
    app.name("trimaps");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_text_, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    setup_field(app);
    setup_count(app);
    setup_construct(app);
    setup_analysis(app);
    setup_census(app);

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? 0 : 1;
    }
    format_ = format_text_ == "json" ? Format::kJson : Format::kTable;
    try {
      action_();
    } catch (const InvariantViolation& e) {
      err_ << "internal error: " << e.what() << '\n';
      return 2;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

 private:
  void setup_field(CLI::App& app) {
    auto* field = app.add_subcommand("field", "Finite field GF(2^e) utilities");
    field->require_subcommand(1);
    auto* info = field->add_subcommand("info", "Modulus, cubic subfield and useful generator count");
    info->add_option("--e", e_, "Field degree")->required();
    info->callback([this] { action_ = [this] { field_info(); }; });
    auto* useful = field->add_subcommand("useful", "List useful generators (bit vectors)");
    useful->add_option("--e", e_, "Field degree")->required();
    useful->callback([this] { action_ = [this] { field_useful(); }; });
    auto* count = field->add_subcommand("count", "Count useful generators and class III dual pairs");
    count->add_option("--e", e_, "Field degree")->required();
    count->callback([this] { action_ = [this] { count_useful(); }; });
  }

  void setup_count(CLI::App& app) {
    auto* count = app.add_subcommand("count", "Counting commands");
    count->require_subcommand(1);
    auto* useful = count->add_subcommand("useful", "Count useful generators and class III dual pairs");
    useful->add_option("--e", e_, "Field degree")->required();
    useful->callback([this] { action_ = [this] { count_useful(); }; });
  }

  void setup_construct(CLI::App& app) {
    auto* construct = app.add_subcommand("construct", "Build a map and print its record");
    construct->require_subcommand(1);
    auto add_output = [this](CLI::App* sub) {
      sub->add_option("--out", out_path_, "Write the map here (plus a .provenance.json sidecar)");
      sub->add_flag("--emit-map", emit_map_, "Include the blade triple in the printed record");
    };

    auto* l2q = construct->add_subcommand("l2q", "Class III map with automorphism group L2(2^e)");
    l2q->add_option("--e", e_, "Field degree (multiple of 3)")->required();
    l2q->add_option("--x", x_bits_, "Useful generator as a bit vector (default: automatic)");
    l2q->add_option("--explicit-cap", explicit_cap_, "Largest group order built explicitly");
    add_output(l2q);
    l2q->callback([this] {
      action_ = [this] {
        std::optional<FieldElement> x;
        if (x_bits_) x = FieldElement(FieldSpec::standard(e_), *x_bits_);
        emit_record(build_l2q_class3(e_, x, explicit_cap_));
      };
    });

    auto* sn = construct->add_subcommand("sn", "Class I seed map with automorphism group S_n");
    sn->add_option("--n", n_, "Degree n >= 5")->required();
    add_output(sn);
    sn->callback([this] { action_ = [this] { emit_record(build_sn_map(n_, explicit_cap_)); }; });

    auto* an = construct->add_subcommand("an", "Class I seed map with automorphism group A_n");
    an->add_option("--n", n_, "Degree n = 1 mod 4, n > 5")->required();
    an->add_option("--variant", variant_, "A or B")->check(CLI::IsMember({"A", "B"}));
    add_output(an);
    an->callback([this] {
      action_ = [this] {
        emit_record(build_an_map(n_, variant_ == "A" ? AnVariant::kA : AnVariant::kB, explicit_cap_));
      };
    });

    auto* l2p = construct->add_subcommand("l2p", "Class I seed map with automorphism group L2(p)");
    l2p->add_option("--p", p_, "Prime p = 1 mod 4, p > 5")->required();
    add_output(l2p);
    l2p->callback([this] { action_ = [this] { emit_record(build_l2p_map(p_, explicit_cap_)); }; });

    auto* klein = construct->add_subcommand("klein", "Klein's map of type {3,7}_8 on PGL2(7)");
    add_output(klein);
    klein->callback([this] { action_ = [this] { emit_record(build_klein_map()); }; });

    auto* cover = construct->add_subcommand("cover", "Elementary abelian 2-cover by a preset character");
    cover->add_option("--map", map_paths_, "Base map file")->required()->expected(1);
    cover->add_option("--preset", preset_, "gamma02, gamma-star, gamma-prime or even")->required();
    add_output(cover);
    cover->callback([this] { action_ = [this] { construct_cover(); }; });

    auto* parallel = construct->add_subcommand("parallel", "Parallel product of maps");
    parallel->add_option("--map", map_paths_, "Factor map files (or the base map with --sigma-plus)");
    parallel->add_flag("--sigma-plus", sigma_plus_, "Multiply the map by its DP and PD images");
    parallel->add_flag("--symbolic", symbolic_, "Certificate-based invariants of the Sigma+ product");
    parallel->add_option("--base", base_, "Symbolic base: klein, l2p:<p>, sn:<n>, an:<n>:<A|B>");
    add_output(parallel);
    parallel->callback([this] { action_ = [this] { construct_parallel(); }; });
  }

  void setup_analysis(CLI::App& app) {
    auto* analyze_cmd = app.add_subcommand("analyze", "Invariants of a map file");
    analyze_cmd->add_option("map,--map", map_paths_, "Map file");
    analyze_cmd->callback([this] { action_ = [this] { analyze_map(); }; });

    auto* classify_cmd = app.add_subcommand("classify", "Wilson class of a regular map file");
    classify_cmd->add_option("map,--map", map_paths_, "Map file");
    classify_cmd->callback([this] { action_ = [this] { classify_map(); }; });

    auto* iso = app.add_subcommand("iso", "Decide whether two map files are isomorphic");
    iso->add_option("maps", map_paths_, "Two map files")->expected(2);
    iso->callback([this] { action_ = [this] { iso_maps(); }; });
  }

  void setup_census(CLI::App& app) {
    auto* census = app.add_subcommand("census", "Regular maps on a finite group up to isomorphism");
    census->require_subcommand(0, 1);
    census->add_option("--group", group_spec_, "l2q:<e>, l2p:<p>, sym:<n>, alt:<n> or file:<path>");
    census->add_option("--type", type_text_, "Keep only maps of type p,q,r");
    census->add_option("--cap", census_cap_, "Largest group order accepted");
    census->add_option("--out-dir", out_dir_, "Write each map as <dir>/map<k>.json");
    auto* traces = census->add_subcommand("l213-traces", "Order-7 trace solutions in L2(13)");
    traces->callback([this] { action_ = [this] { l213_traces(); }; });
    census->callback([this] {
      if (!action_) action_ = [this] { run_census(); };
    });
  }

  // ---- actions ----

  void field_info() {
    require(e_ >= 1 && e_ <= kMaxFieldDegree, "field degree must lie in 1.." + std::to_string(kMaxFieldDegree));
    const FieldSpec spec = FieldSpec::standard(e_);
    json j{{"e", e_}, {"order", spec.order()}, {"modulus", spec.modulus()}, {"cubic_subfield", spec.has_cubic_subfield()}};
    if (spec.has_cubic_subfield()) {
      j["cubic_subfield_order"] = std::uint64_t{1} << spec.cubic_degree();
      const BigInt count = count_useful_generators(e_);
      j["N_e"] = bigint_to_json(count);
      j["dual_pairs"] = bigint_to_json(count / e_);
    }
    emit(out_, format_, j);
  }

  void field_useful() {
    require(e_ >= 1 && e_ <= kMaxEnumerationDegree, "enumeration needs e <= " + std::to_string(kMaxEnumerationDegree));
    const FieldSpec spec = FieldSpec::standard(e_);
    json list = json::array();
    for (const auto& x : enumerate_useful_generators(spec)) list.push_back(x.bits());
    emit(out_, format_, json{{"e", e_}, {"modulus", spec.modulus()}, {"useful", list}});
  }

  void count_useful() {
    require(e_ >= 3 && e_ % 3 == 0, "useful generators exist only for e divisible by 3");
    const BigInt count = count_useful_generators(e_);
    emit(out_, format_, json{{"N_e", bigint_to_json(count)}, {"dual_pairs", bigint_to_json(count / e_)}});
  }

  void emit_record(const ConstructionRecord& record) {
    json j = provenance_json(record);
    if (record.map) {
      j["degree"] = record.map->degree();
      if (emit_map_) j["map"] = map_to_json(*record.map);
    }
    if (!out_path_.empty()) {
      require(record.map.has_value(), "no explicit map to write (the construction was symbolic)");
      write_map_file(out_path_, *record.map);
      std::ofstream sidecar(sidecar_path(out_path_));
      require(sidecar.good(), "cannot write " + sidecar_path(out_path_).string());
      sidecar << provenance_json(record).dump(2) << '\n';
      j["map_file"] = out_path_;
    }
    emit(out_, format_, j);
  }

  void construct_cover() {
    const MapTriple base = read_map_file(map_paths_.front());
    const CoverPreset preset = parse_cover_preset(preset_);
    const CoverResult cover = covering_by_character(base, cover_images(preset));
    ConstructionRecord record = record_from_map(
        "cover", {{"base", map_paths_.front()}, {"preset", cover_preset_name(preset)}, {"sheets", cover.sheets}},
        cover.map);
    emit_record(record);
  }

  void construct_parallel() {
    if (symbolic_) {
      require(!base_.empty(), "--symbolic needs --base");
      const ConstructionRecord base = base_record(base_);
      require(base.map.has_value(), "symbolic products need an explicit base map");
      const auto parity = parity_vector(*base.map);
      const BigInt simple = parity ? base.group_order / 2 : base.group_order;
      emit_record(parallel_product_symbolic(base, simple, parity));
      return;
    }
    require(!map_paths_.empty(), "parallel needs --map files");
    std::vector<MapTriple> maps;
    for (const auto& path : map_paths_) maps.push_back(read_map_file(path));
    MapTriple product = sigma_plus_ ? (require(maps.size() == 1, "--sigma-plus takes exactly one map"),
                                       sigma_plus_product(maps.front()))
                                    : parallel_product_explicit(maps);
    validate(product);
    emit_record(record_from_map("parallel", {{"maps", map_paths_}, {"sigma_plus", sigma_plus_}}, std::move(product)));
  }

  MapTriple single_map() {
    require(map_paths_.size() == 1, "expected exactly one map file");
    return read_map_file(map_paths_.front());
  }

  void analyze_map() {
    const MapTriple m = single_map();
    const RegularityReport regularity = is_regular(m);
    json j{{"regular", regularity.regular}, {"automorphisms", regularity.automorphisms}};
    if (regularity.regular) {
      j.update(invariants_json(analyze(m)));
    } else {
      j["degree"] = m.degree();
      j["type"] = type_json(map_type(m));
      const MapCounts c = counts(m);
      j["V"] = c.vertices;
      j["E"] = c.edges;
      j["F"] = c.faces;
      j["Pe"] = c.petrie_polygons;
      j["chi"] = euler_characteristic(m);
      j["orientable"] = orientability(m);
    }
    emit(out_, format_, j);
  }

  void classify_map() { emit(out_, format_, classification_json(classify(single_map()))); }

  void iso_maps() {
    require(map_paths_.size() == 2, "iso needs two map files");
    const MapTriple a = read_map_file(map_paths_[0]);
    const MapTriple b = read_map_file(map_paths_[1]);
    const bool regular = is_regular(b).regular;
    emit(out_, format_, json{{"isomorphic", are_isomorphic(a, b, regular)}});
  }

  void run_census() {
    require(!group_spec_.empty(), "census needs --group (or the l213-traces subcommand)");
    CensusQuery query;
    query.generators = parse_group_spec(group_spec_);
    if (!type_text_.empty()) query.type = parse_type(type_text_);
    query.cap = census_cap_;
    const CensusResult result = enumerate_maps(query);
    if (!out_dir_.empty()) std::filesystem::create_directories(out_dir_);
    json entries = json::array();
    for (std::size_t k = 0; k < result.entries.size(); ++k) {
      const auto& entry = result.entries[k];
      json j{{"index", k}, {"class", wilson_class_name(entry.classification.wilson_class)},
             {"sigma_orbit", entry.sigma_orbit}};
      j.update(invariants_json(entry.invariants));
      if (!out_dir_.empty()) {
        const auto path = std::filesystem::path(out_dir_) / ("map" + std::to_string(k) + ".json");
        write_map_file(path, entry.map);
        j["map_file"] = path.string();
      }
      j["witness"] = {entry.witness[0].to_cycle_string(), entry.witness[1].to_cycle_string(),
                      entry.witness[2].to_cycle_string()};
      entries.push_back(std::move(j));
    }
    if (format_ == Format::kJson) {
      emit(out_, format_,
           json{{"group_order", result.group_order}, {"maps", result.entries.size()},
                {"sigma_orbits", result.sigma_orbits}, {"entries", entries}});
    } else {
      out_ << "group order " << result.group_order << ", " << result.entries.size() << " maps in "
           << result.sigma_orbits << " Sigma-orbits\n";
      print_table(out_, entries);
    }
  }

  void l213_traces() {
    json list = json::array();
    for (const auto& s : solve_l213_traces()) {
      const auto [r0, r1, r2] = l213_generators(s);
      list.push_back({{"a", s.a},
                      {"b", s.b},
                      {"c", s.c},
                      {"traces", {pm_trace(r0 * r1).value, pm_trace(r1 * r2).value, pm_trace(r0 * r1 * r2).value}}});
    }
    emit(out_, format_, list);
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<void()> action_;
  Format format_ = Format::kTable;
  std::string format_text_ = "table";

  unsigned e_ = 0;
  unsigned n_ = 0;
  std::uint32_t p_ = 0;
  std::optional<std::uint64_t> x_bits_;
  std::size_t explicit_cap_ = kExplicitBladeCap;
  std::string variant_ = "A";
  std::string out_path_;
  bool emit_map_ = false;
  std::vector<std::string> map_paths_;
  std::string preset_;
  bool sigma_plus_ = false;
  bool symbolic_ = false;
  std::string base_;
  std::string group_spec_;
  std::string type_text_;
  std::size_t census_cap_ = kCensusGroupCap;
  std::string out_dir_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace trimaps::cli
