#include "ctl/report.hpp"

#include <fstream>
#include <sstream>

namespace ctl {

static const char* kVersion = "ctl 1.0.0";

Json json_of(const Cyclotomic& z) {
  Json j;
  j["conductor"] = z.conductor();
  Json coeffs = Json::array();
  for (const auto& r : z.coeffs()) {
    if (r.is_integer()) {
      coeffs.push_back(r.num());
    } else {
      coeffs.push_back(r.str());
    }
  }
  j["coeffs"] = coeffs;
  return j;
}

Json json_of(const FqScalar& s) {
  Json j;
  j["p"] = s.field()->p();
  j["k"] = s.field()->k();
  j["coeffs"] = s.coeffs();
  return j;
}

Json json_of(const Perm& p) { return p.cycle_string(); }

Json json_of(const Character& chi) {
  Json vals = Json::array();
  for (const auto& v : chi.values()) vals.push_back(json_of(v));
  return vals;
}

Json json_of(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (!v.holds) {
    j["failed_condition"] = v.failed_condition;
    j["witness"] = v.witness;
  }
  return j;
}

Json json_table(GroupPtr g) {
  auto table = CharacterTable::of(g);
  Json j;
  j["order"] = g->order();
  j["degree"] = g->degree();
  j["exponent"] = g->exponent();
  Json classes = Json::array();
  for (const auto& c : g->classes()) {
    Json cl;
    cl["representative"] = g->element(c.rep).cycle_string();
    cl["size"] = c.members.size();
    cl["element_order"] = c.element_order;
    classes.push_back(cl);
  }
  j["classes"] = classes;
  Json irr = Json::array();
  for (int i = 0; i < table->size(); ++i) {
    Json row;
    row["index"] = i;
    row["degree"] = table->irr(i).degree();
    row["values"] = json_of(table->irr(i));
    irr.push_back(row);
  }
  j["irreducibles"] = irr;
  return j;
}

Json json_blocks(GroupPtr g, int p) {
  ReductionContext ctx(p, g->exponent());
  auto bs = BlockSet::of(g, p, ctx);
  Json j;
  j["group_order"] = g->order();
  j["p"] = p;
  j["field"] = {{"p", ctx.field()->p()}, {"k", ctx.field()->k()}};
  Json blocks = Json::array();
  for (int i = 0; i < bs->size(); ++i) {
    const Block& b = bs->block(i);
    Json jb;
    jb["id"] = b.id;
    jb["members"] = b.members;
    jb["defect"] = b.defect;
    Json gens = Json::array();
    for (const auto& x : b.defect_group->generators())
      gens.push_back(x.cycle_string());
    jb["defect_group_order"] = b.defect_group->order();
    jb["defect_group_generators"] = gens;
    Json lam = Json::array();
    for (const auto& v : b.lambda) lam.push_back(json_of(v));
    jb["lambda"] = lam;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  return j;
}

Json json_of(const Weight& w, const ReductionContext& ctx) {
  Json j;
  Json rgens = Json::array();
  for (const auto& x : w.r->generators()) rgens.push_back(x.cycle_string());
  j["radical_order"] = w.r->order();
  j["radical_generators"] = rgens;
  j["normalizer_order"] = w.normalizer->order();
  j["phi_degree"] = w.phi.degree();
  j["phi_values"] = json_of(w.phi);
  j["block"] = weight_block(w, ctx);
  return j;
}

Json json_factor_set(const FactorSet& fs) {
  Json j;
  Json reps = Json::array();
  for (int c = 0; c < fs.cosets(); ++c)
    reps.push_back(fs.coset_rep(c).cycle_string());
  j["transversal"] = reps;
  Json table = Json::array();
  for (int a = 0; a < fs.cosets(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < fs.cosets(); ++b) row.push_back(json_of(fs.at_cosets(a, b)));
    table.push_back(row);
  }
  j["values"] = table;
  return j;
}

Json json_proj_rep(const ProjRep& p) {
  Json j;
  j["degree"] = p.rep_degree();
  j["group_order"] = p.group()->order();
  j["normal_order"] = p.normal()->order();
  Json mats = Json::array();
  for (int i = 0; i < p.group()->order(); ++i) {
    Mat m = p.at(p.group()->element(i));
    Json jm = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(json_of(m.at(r, c)));
      jm.push_back(row);
    }
    Json entry;
    entry["element"] = p.group()->element(i).cycle_string();
    entry["matrix"] = jm;
    mats.push_back(entry);
  }
  j["values"] = mats;
  j["factor_set"] = json_factor_set(p.factor_set());
  return j;
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (spec.find("degree:") != std::string::npos) return PermGroup::from_text(spec);
  // a path to a file in the two-line text format also works
  if (std::ifstream in(spec); in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return PermGroup::from_text(buf.str());
  }
  return PermGroup::named(spec);
}

namespace {

GroupPtr subgroup_from_json(const GroupPtr& g, const Json& gens) {
  std::vector<Perm> parsed;
  for (const auto& s : gens)
    parsed.push_back(Perm::from_cycles(g->degree(), s.get<std::string>()));
  return generated_subgroup(*g, parsed);
}

std::string render_text(const Json& payload) {
  std::ostringstream os;
  std::function<void(const Json&, int)> walk = [&](const Json& j, int depth) {
    std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_object() || it.value().is_array()) {
          os << pad << it.key() << ":\n";
          walk(it.value(), depth + 1);
        } else {
          os << pad << it.key() << ": " << it.value().dump() << "\n";
        }
      }
    } else if (j.is_array()) {
      for (const auto& v : j) {
        if (v.is_object() || v.is_array()) {
          os << pad << "-\n";
          walk(v, depth + 1);
        } else {
          os << pad << "- " << v.dump() << "\n";
        }
      }
    } else {
      os << pad << j.dump() << "\n";
    }
  };
  walk(payload, 0);
  return os.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  bool json = false;
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
  ParsedArgs out;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      out.json = true;
    } else if (a == "-p" || a == "--spec" || a == "--seed-projrep" ||
               a == "--block" || a == "--level") {
      if (i + 1 >= args.size()) throw parse_error("missing value for " + a);
      out.options[a] = args[++i];
    } else if (!a.empty() && a[0] == '-') {
      throw parse_error("unknown option '" + a + "'");
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

int require_prime(const ParsedArgs& args) {
  auto it = args.options.find("-p");
  if (it == args.options.end()) throw parse_error("missing -p <prime>");
  int p = std::stoi(it->second);
  if (p < 2) throw parse_error("invalid prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw parse_error("p is not prime");
  return p;
}

Json cmd_awc(GroupPtr g, int p) {
  ReductionContext ctx(p, g->exponent());
  auto bs = BlockSet::of(g, p, ctx);
  auto weights = enumerate_weights(g, p);
  Json j;
  j["group_order"] = g->order();
  j["p"] = p;
  j["weights"] = weights.size();
  j["p_regular_classes"] = p_regular_class_count(*g, p);
  j["match"] = static_cast<int>(weights.size()) == p_regular_class_count(*g, p);
  Json per_block = Json::array();
  for (int b = 0; b < bs->size(); ++b) {
    int count = 0;
    for (const auto& w : weights)
      if (weight_block(w, ctx) == b) ++count;
    Json row;
    row["block"] = b;
    row["defect"] = bs->block(b).defect;
    row["weights"] = count;
    row["irreducibles"] = bs->block(b).members.size();
    per_block.push_back(row);
  }
  j["per_block"] = per_block;
  return j;
}

Json cmd_weights(GroupPtr g, int p, const ParsedArgs& args) {
  ReductionContext ctx(p, g->exponent());
  auto weights = enumerate_weights(g, p);
  Json arr = Json::array();
  int filter = -1;
  if (args.options.count("--block")) filter = std::stoi(args.options.at("--block"));
  for (const auto& w : weights) {
    Json jw = json_of(w, ctx);
    if (filter >= 0 && jw["block"] != filter) continue;
    arr.push_back(jw);
  }
  Json j;
  j["group_order"] = g->order();
  j["p"] = p;
  j["weights"] = arr;
  return j;
}

Json cmd_triple_check(const ParsedArgs& args) {
  Json spec = load_json_file(args.options.at("--spec"));
  GroupPtr g = parse_group_spec(spec.at("group").get<std::string>());
  GroupPtr n = subgroup_from_json(g, spec.at("N"));
  GroupPtr h = subgroup_from_json(g, spec.at("H"));
  GroupPtr m = intersect(*n, *h);
  int p = spec.at("prime").get<int>();
  ReductionContext ctx(p, g->exponent());
  std::string levels = args.options.count("--level") ? args.options.at("--level") : "b";
  RelLevel level = levels == "g"   ? RelLevel::g
                   : levels == "c" ? RelLevel::c
                                   : RelLevel::b;
  TriplePair pair;
  if (spec.contains("theta_tilde")) {
    Character tt = CharacterTable::of(g)->irr(spec.at("theta_tilde").get<int>());
    Character pt = CharacterTable::of(h)->irr(spec.at("phi_tilde").get<int>());
    pair = make_linear_pair(g, n, h, m, tt, pt, ctx);
  } else {
    Character theta = CharacterTable::of(n)->irr(spec.at("theta").get<int>());
    Character phi = CharacterTable::of(m)->irr(spec.at("phi").get<int>());
    pair.upper = {g, n, theta};
    pair.lower = {h, m, phi};
    pair.p_upper = projective_rep_for_triple(g, n, theta);
    pair.p_lower = projective_rep_for_triple(h, m, phi);
    pair.ctx = ctx;
    if (args.options.count("--seed-projrep")) {
      Json seeds = load_json_file(args.options.at("--seed-projrep"));
      if (seeds.contains("lower_twist")) {
        auto qh = quotient(h, m);
        auto tq = CharacterTable::of(qh.group);
        Character lam =
            inflate(tq->irr(seeds.at("lower_twist").get<int>()), qh.projection);
        const FactorSet& fs = pair.p_lower.factor_set();
        std::vector<Cyclotomic> twist(fs.cosets());
        for (int c = 0; c < fs.cosets(); ++c)
          twist[c] = lam.value_at(fs.coset_rep(c));
        pair.p_lower = pair.p_lower.twisted(twist);
      }
    } else {
      auto adjusted = rescale_search(pair, level);
      if (adjusted) pair = *adjusted;
    }
  }
  Verdict v = check_relation(pair, level);
  Json j;
  j["level"] = level_name(level);
  j["verdict"] = json_of(v);
  return j;
}

Json cmd_triple_lift(const ParsedArgs& args) {
  Json spec = load_json_file(args.options.at("--spec"));
  GroupPtr gt = parse_group_spec(spec.at("group").get<std::string>());
  GroupPtr g = subgroup_from_json(gt, spec.at("G"));
  int p = spec.at("prime").get<int>();
  ReductionContext ctx(p, gt->exponent());
  LiftInput in;
  in.a = gt;
  in.gtilde = gt;
  in.g = g;
  in.ctx = ctx;
  auto tg = CharacterTable::of(g);
  for (const auto& idx : spec.at("domain"))
    in.domain.push_back(tg->irr(idx.get<int>()));
  auto weights = enumerate_weights(g, p);
  for (const auto& idx : spec.at("omega")) {
    int wi = idx.get<int>();
    if (wi < 0 || wi >= static_cast<int>(weights.size()))
      throw parse_error("weight index out of range");
    in.omega.push_back(static_cast<int>(in.weights.size()));
    in.weights.push_back(weights[wi]);
  }
  // certificates: canonical pairs (A_chi, G, chi) >= (N_A(R)_phi, N_G(R), phi)
  for (size_t i = 0; i < in.domain.size(); ++i) {
    const Character& chi = in.domain[i];
    const Weight& w = in.weights[in.omega[i]];
    std::vector<Perm> stab;
    for (const auto& x : gt->elements())
      if (chi.conjugate_by(x) == chi) stab.push_back(x);
    auto achi = group_from_elements(gt->degree(), std::move(stab));
    std::vector<Perm> wstab;
    for (const auto& x : achi->elements())
      if (weights_equal(conjugate_weight(w, x), w)) wstab.push_back(x);
    auto na = group_from_elements(gt->degree(), std::move(wstab));
    in.certs.push_back(make_pair_canonical(achi, g, chi, na, w.normalizer,
                                           w.phi_on_normalizer(), ctx,
                                           RelLevel::b));
  }
  LiftOutput out = lift_bijection_pprime(in);
  Json j;
  j["domain_size"] = out.domain_tilde.size();
  j["weights_size"] = out.weights_tilde.size();
  Json omega = Json::array();
  for (size_t i = 0; i < out.domain_tilde.size(); ++i) {
    Json row;
    row["character_degree"] = out.domain_tilde[i].degree();
    row["weight"] = json_of(out.weights_tilde[out.omega_tilde[i]], ctx);
    Verdict v = check_relation(out.certs_tilde[i], RelLevel::b);
    row["certificate"] = json_of(v);
    omega.push_back(row);
  }
  j["map"] = omega;
  j["bijective"] = out.report.bijective;
  j["blockwise"] = out.report.blockwise;
  j["equivariant"] = out.report.equivariant;
  j["violations"] = out.report.violations;
  return j;
}

Json cmd_thm54(const ParsedArgs& args) {
  Json spec = load_json_file(args.options.at("--spec"));
  GroupPtr a = parse_group_spec(spec.at("A").get<std::string>());
  Thm54Input in;
  in.a = a;
  in.e = spec.contains("E") ? subgroup_from_json(a, spec.at("E"))
                            : trivial_subgroup(*a);
  in.gtilde = spec.contains("Gtilde") ? subgroup_from_json(a, spec.at("Gtilde")) : a;
  in.gtilde_prime = subgroup_from_json(a, spec.at("GtildePrime"));
  in.g = subgroup_from_json(a, spec.at("G"));
  int p = spec.at("prime").get<int>();
  in.ctx = ReductionContext(p, a->exponent());
  auto bs = BlockSet::of(in.gtilde, p, in.ctx);
  if (spec.contains("btilde")) {
    for (const auto& b : spec.at("btilde")) in.btilde.push_back(b.get<int>());
  } else {
    for (int i = 0; i < bs->size(); ++i) in.btilde.push_back(i);
  }
  auto tg = CharacterTable::of(in.gtilde);
  for (const auto& idx : spec.at("itilde"))
    in.itilde.push_back(tg->irr(idx.get<int>()));
  auto weights = enumerate_weights(in.gtilde, p);
  for (const auto& idx : spec.at("atilde"))
    in.atilde.push_back(weights.at(idx.get<int>()));
  for (const auto& idx : spec.at("omega")) in.omega_tilde.push_back(idx.get<int>());
  if (spec.contains("derive_ivb"))
    in.derive_ivb_from_cyclic_count = spec.at("derive_ivb").get<bool>();
  Thm54Output out = thm54_construct_and_verify(in);
  Json j;
  j["ok"] = out.ok;
  Json fails = Json::array();
  for (const auto& f : out.failures) {
    Json jf;
    jf["label"] = f.label;
    jf["witness"] = f.witness;
    fails.push_back(jf);
  }
  j["failures"] = fails;
  if (out.ok) {
    j["domain_size"] = out.domain.size();
    j["weight_orbits"] = out.weight_orbits.size();
    j["omega"] = out.omega;
    Json certs = Json::array();
    for (size_t i = 0; i < out.certs.size(); ++i) {
      Json c;
      c["relation"] = json_of(check_relation(out.certs[i], RelLevel::b));
      c["normal"] = json_of(out.cert_verdicts[i]);
      certs.push_back(c);
    }
    j["certificates"] = certs;
  }
  return j;
}

}  // namespace

RunResult execute_command(const std::vector<std::string>& args) {
  RunResult result;
  try {
    ParsedArgs parsed = parse_args(args);
    if (parsed.positional.empty()) throw parse_error("missing command");
    const std::string& cmd = parsed.positional[0];
    Json payload;
    if (cmd == "table") {
      if (parsed.positional.size() < 2) throw parse_error("table needs a group");
      payload = json_table(parse_group_spec(parsed.positional[1]));
    } else if (cmd == "blocks") {
      if (parsed.positional.size() < 2) throw parse_error("blocks needs a group");
      payload = json_blocks(parse_group_spec(parsed.positional[1]),
                            require_prime(parsed));
    } else if (cmd == "weights") {
      if (parsed.positional.size() < 2) throw parse_error("weights needs a group");
      payload = cmd_weights(parse_group_spec(parsed.positional[1]),
                            require_prime(parsed), parsed);
    } else if (cmd == "awc") {
      if (parsed.positional.size() < 2) throw parse_error("awc needs a group");
      payload = cmd_awc(parse_group_spec(parsed.positional[1]), require_prime(parsed));
    } else if (cmd == "triple") {
      if (parsed.positional.size() < 2) throw parse_error("triple needs a subcommand");
      if (!parsed.options.count("--spec")) throw parse_error("missing --spec <file>");
      if (parsed.positional[1] == "check") {
        payload = cmd_triple_check(parsed);
        if (!payload["verdict"]["holds"].get<bool>()) result.exit_code = 1;
      } else if (parsed.positional[1] == "lift") {
        payload = cmd_triple_lift(parsed);
        if (!payload["bijective"].get<bool>() || !payload["blockwise"].get<bool>() ||
            !payload["equivariant"].get<bool>())
          result.exit_code = 1;
      } else {
        throw parse_error("unknown triple subcommand '" + parsed.positional[1] + "'");
      }
    } else if (cmd == "thm54") {
      if (!parsed.options.count("--spec")) throw parse_error("missing --spec <file>");
      payload = cmd_thm54(parsed);
      if (!payload["ok"].get<bool>()) result.exit_code = 1;
    } else {
      throw parse_error("unknown command '" + cmd + "'");
    }
    Json report;
    report["command"] = args;
    report["version"] = kVersion;
    report["payload"] = payload;
    result.payload = report;
    result.text = parsed.json ? report.dump(2) + "\n" : render_text(payload);
  } catch (const parse_error& e) {
    result.exit_code = 2;
    result.text = std::string("input error: ") + e.what() + "\n";
  } catch (const precondition_error& e) {
    result.exit_code = 2;
    result.text = std::string("precondition violated: ") + e.what() + "\n";
  } catch (const resource_error& e) {
    result.exit_code = 2;
    result.text = std::string("resource bound: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace ctl
