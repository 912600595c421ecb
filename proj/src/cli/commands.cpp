#include "linfin/cli/commands.hpp"

#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "linfin/cli/group_io.hpp"
#include "linfin/core/errors.hpp"
#include "linfin/decide/decide.hpp"
#include "linfin/recognize/recognize.hpp"
#include "linfin/sw/congruence.hpp"

namespace linfin::cli {

using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::size_t cap = 200000;
  std::size_t skip = 0;
  std::size_t max_attempts = 64;
  std::size_t budget_bits = std::size_t{1} << 20;
  std::size_t precheck = 10;
  std::string file;
  std::string element_file;
  std::optional<std::size_t> gen_index;
  std::optional<std::string> word;

  decide::Config config() const {
    decide::Config c;
    c.seed = seed;
    c.cap = cap;
    c.skip = skip;
    c.max_attempts = max_attempts;
    c.precheck = precheck;
    return c;
  }
  scalar::Limits limits() const {
    scalar::Limits l;
    l.max_bits = budget_bits;
    return l;
  }
};

struct Result {
  json body;
  int code = 0;
};

int emit(std::ostream& out, const std::string& command, Result r) {
  r.body["schema_version"] = kSchemaVersion;
  r.body["command"] = command;
  out << r.body.dump(2) << "\n";
  return r.code;
}

Result from_verdict(const decide::Verdict& v) {
  return {v.to_json(), v.outcome == decide::Outcome::Undecided ? 1 : 0};
}

// Runs body() when G is finite; otherwise reports the verdict.
Result when_finite(const scalar::GroupInput& G, const Options& o,
                   const std::function<json(const decide::Verdict&)>& body) {
  auto v = decide::is_finite(G, o.config());
  if (!v.finite()) {
    Result r = from_verdict(v);
    r.body.erase("certificate");
    return r;
  }
  json j = body(v);
  j["finite"] = true;
  return {j, 0};
}

Result cmd_isfinite(const Options& o) {
  auto G = read_group_file(o.file, o.limits()).group();
  auto v = decide::is_finite(G, o.config());
  Result r = from_verdict(v);
  if (v.finite() && !v.order) {
    auto copy = recognize::isomorphic_copy(G, o.config());
    r.body["order"] = std::to_string(copy.order());
  }
  return r;
}

Result cmd_eltorder(const Options& o) {
  auto input = read_group_file(o.file, o.limits());
  auto G = input.group();
  auto names = fingrp::generator_names(G.rank());
  fingrp::Word w;
  if (o.word && o.gen_index) throw DomainError("give either --gen-index or --word");
  if (o.word) {
    w = fingrp::parse_word(*o.word, names);
  } else {
    std::size_t i = o.gen_index.value_or(1);
    if (i == 0 || i > G.rank()) throw DomainError("--gen-index out of range");
    w = fingrp::Word::generator(i - 1);
  }
  Result r = from_verdict(decide::is_finite_cyclic(decide::evaluate_word(w, G), o.config()));
  r.body["element"] = fingrp::to_string(w, names);
  return r;
}

Result cmd_swimage(const Options& o) {
  auto G = read_group_file(o.file, o.limits()).group();
  auto m = sw::build_sw(G, o.skip);
  json gens = json::array();
  for (const auto& g : G.gens) gens.push_back(sw::matrix_json(m.apply(g)));
  return {{{"certificate", m.certificate()}, {"image_generators", gens}, {"skip", o.skip}}, 0};
}

Result cmd_recognize(const Options& o) {
  auto G = read_group_file(o.file, o.limits()).group();
  return when_finite(G, o, [&](const decide::Verdict&) {
    return json{{"copy", recognize::isomorphic_copy(G, o.config()).to_json()}};
  });
}

Result cmd_order(const Options& o) {
  auto G = read_group_file(o.file, o.limits()).group();
  return when_finite(G, o, [&](const decide::Verdict& v) {
    Integer n = v.order ? *v.order
                        : Integer(static_cast<unsigned long>(recognize::isomorphic_copy(G, o.config()).order()));
    return json{{"order", linfin::to_string(n)}};
  });
}

Result cmd_member(const Options& o) {
  auto input = read_group_file(o.file, o.limits());
  auto G = input.group();
  auto x = read_element_file(o.element_file, input.field, input.degree);
  return when_finite(G, o, [&](const decide::Verdict&) {
    return recognize::membership(x, G, o.config()).to_json(G.rank());
  });
}

Result cmd_bounds(const Options& o) {
  auto input = read_group_file(o.file, o.limits());
  return {{{"bounds", decide::torsion_bounds(input.degree, *input.field).to_json()}}, 0};
}

Result cmd_structure(const Options& o, bool want_center) {
  auto G = read_group_file(o.file, o.limits()).group();
  return when_finite(G, o, [&](const decide::Verdict&) {
    auto copy = recognize::isomorphic_copy(G, o.config());
    auto S = want_center ? recognize::center(copy, G) : recognize::derived(copy, G);
    return json{{want_center ? "center" : "derived", S.to_json(G.rank())}, {"group_order", copy.order()}};
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finiteness and structure of matrix groups over function fields", "linfin"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for random elements")->capture_default_str();
  app.add_option("--cap", o.cap, "enumeration cap")->capture_default_str();
  app.add_option("--skip", o.skip, "index of the first congruence map")->capture_default_str();
  app.add_option("--max-attempts", o.max_attempts, "maps tried when building a copy")->capture_default_str();
  app.add_option("--budget-bits", o.budget_bits, "bit budget per coefficient")->capture_default_str();
  app.add_option("--precheck", o.precheck, "random elements tested first")->capture_default_str();

  std::vector<std::pair<CLI::App*, std::function<Result()>>> commands;
  auto add = [&](const char* name, const char* help, std::function<Result()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "group file")->required();
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  add("isfinite", "decide finiteness", [&] { return cmd_isfinite(o); });
  auto* elt = add("eltorder", "order of one element", [&] { return cmd_eltorder(o); });
  elt->add_option("--gen-index", o.gen_index, "1-based generator index");
  elt->add_option("--word", o.word, "word in the generators, e.g. a*b^-1");
  add("swimage", "congruence image of the generators", [&] { return cmd_swimage(o); });
  add("recognize", "isomorphic copy over a finite field", [&] { return cmd_recognize(o); });
  auto* mem = add("member", "membership with a witness word", [&] { return cmd_member(o); });
  mem->add_option("element", o.element_file, "element file")->required();
  add("order", "order of a finite group", [&] { return cmd_order(o); });
  add("bounds", "torsion bounds for the group's degree and field", [&] { return cmd_bounds(o); });
  add("center", "center of a finite group", [&] { return cmd_structure(o, true); });
  add("derived", "derived subgroup of a finite group", [&] { return cmd_structure(o, false); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    try {
      return emit(out, name, fn());
    } catch (const ResourceError& e) {
      return emit(out, name, {{{"finite", "undecided"}, {"reason", e.what()}}, 1});
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
    } catch (const MathError& e) {
      err << "error: " << e.what() << "\n";
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << "\n";
    }
    return 2;
  }
  return 2;
}

}  // namespace linfin::cli
