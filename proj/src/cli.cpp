#include "dessins/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dessins/dessin.hpp"
#include "dessins/dessin_file.hpp"
#include "dessins/dot.hpp"
#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/moduli.hpp"
#include "dessins/triangle.hpp"

namespace dessins {

namespace {

enum class Format { plain, records };

struct Context {
  std::ostream &out;
  Format format = Format::plain;

  bool records() const { return format == Format::records; }
  void kv(const std::string &key, const std::string &value) const {
    out << key << '=' << value << '\n';
  }
};

/// Default cap, overridden by the DESSIN_CAP environment variable.
std::uint64_t env_cap(std::uint64_t fallback) {
  const char *v = std::getenv("DESSIN_CAP");
  if (!v || !*v)
    return fallback;
  char *end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0)
    throw Error(std::string("DESSIN_CAP must be a positive integer, got '") + v + "'");
  return cap;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

std::string passport_records(const Passport &p) {
  return p.x.to_list_string() + "|" + p.y.to_list_string() + "|" + p.z.to_list_string();
}

void write_or_print(const Context &ctx, const std::string &path, const Dessin &d) {
  if (path.empty())
    ctx.out << DessinFile::from_dessin(d).to_string();
  else
    write_dessin_file(path, d);
}

/// Splits on commas outside brackets and parentheses, so "[x,x^y]" stays whole.
std::vector<std::string> split_top_level(const std::string &text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

// ---------------------------------------------------------------------------

void cmd_info(const Context &ctx, const std::string &file) {
  const Dessin d = read_dessin_file(file);
  const auto p = passport(d);
  const auto g = monodromy_group(d);
  const bool regular = g.order() == d.degree();
  if (ctx.records()) {
    ctx.kv("name", d.name());
    ctx.kv("degree", std::to_string(d.degree()));
    ctx.kv("passport", passport_records(p));
    ctx.kv("genus", std::to_string(genus(d)));
    ctx.kv("monodromy_order", g.order().str());
    ctx.kv("full_symmetric", true_false(g.is_full_symmetric()));
    ctx.kv("regular", true_false(regular));
    if (regular)
      ctx.kv("type", type_of_regular(d).to_string());
    return;
  }
  ctx.out << d.name() << ": degree " << d.degree() << ", genus " << genus(d)
          << ", monodromy order " << g.order().str() << '\n';
  ctx.out << "passport: " << p.to_string() << '\n';
  ctx.out << "full symmetric group: " << yes_no(g.is_full_symmetric()) << '\n';
  ctx.out << "regular: " << yes_no(regular) << '\n';
  if (regular)
    ctx.out << "type: " << type_of_regular(d).to_string() << '\n';
}

void cmd_cover(const Context &ctx, const std::string &file, const std::string &out_path,
               std::uint64_t cap) {
  const Dessin d = read_dessin_file(file);
  const Dessin cover = regular_cover(d, cap);
  write_or_print(ctx, out_path, cover);
  if (out_path.empty())
    return;
  const auto t = type_of_regular(cover);
  if (ctx.records()) {
    ctx.kv("cover_degree", std::to_string(cover.degree()));
    ctx.kv("cover_genus", std::to_string(genus(cover)));
    ctx.kv("cover_type", t.to_string());
  } else {
    ctx.out << "regular cover of " << d.name() << ": degree " << cover.degree() << ", genus "
            << genus(cover) << ", type " << t.to_string() << " -> " << out_path << '\n';
  }
}

void cmd_quotient_center(const Context &ctx, const std::string &file, const std::string &out_path,
                         std::uint64_t cap) {
  const Dessin d = read_dessin_file(file);
  const auto center = monodromy_group(d).center(cap);
  const Dessin cover = regular_cover(d, cap);
  const auto cover_center = monodromy_group(cover).center(cap);
  const Dessin q = quotient_by_central(cover, cover_center)
                       .with_name(d.name() + "-central-quotient");
  const auto t = type_of_regular(q);
  const auto chi = euler_rh(q.degree(), t);

  if (ctx.records()) {
    ctx.kv("cover_degree", std::to_string(cover.degree()));
    ctx.kv("cover_genus", std::to_string(genus(cover)));
    ctx.kv("center_order", std::to_string(center.size()));
    for (const auto &z : center)
      ctx.kv("center_element", to_cycle_string(z));
    ctx.kv("quotient_degree", std::to_string(q.degree()));
    ctx.kv("quotient_genus", std::to_string(genus(q)));
    ctx.kv("quotient_type", t.to_string());
    ctx.kv("quotient_euler_characteristic", chi.str());
  } else {
    ctx.out << "regular cover: degree " << cover.degree() << ", genus " << genus(cover) << '\n';
    ctx.out << "center of the monodromy group (order " << center.size() << "):\n";
    for (const auto &z : center)
      ctx.out << "  " << to_cycle_string(z) << '\n';
    ctx.out << "central quotient: degree " << q.degree() << ", genus " << genus(q) << ", type "
            << t.to_string() << ", Euler characteristic " << chi.str() << '\n';
  }
  if (!out_path.empty())
    write_dessin_file(out_path, q);
}

void cmd_iso(const Context &ctx, const std::string &a, const std::string &b) {
  const Dessin d1 = read_dessin_file(a), d2 = read_dessin_file(b);
  const auto map = isomorphic(d1, d2);
  if (ctx.records()) {
    ctx.kv("isomorphic", true_false(map.has_value()));
    if (map)
      ctx.kv("edge_map", to_cycle_string(*map));
    return;
  }
  if (map)
    ctx.out << d1.name() << " and " << d2.name() << " are isomorphic; edge map "
            << to_cycle_string(*map) << '\n';
  else
    ctx.out << d1.name() << " and " << d2.name() << " are not isomorphic\n";
}

void cmd_kernels(const Context &ctx, const std::string &a, const std::string &b, bool witness,
                 std::uint64_t budget) {
  const Dessin d1 = read_dessin_file(a), d2 = read_dessin_file(b);
  const auto g1 = monodromy_group(d1).order();
  const auto g2 = monodromy_group(d2).order();
  const auto k = subdirect_group(d1, d2).order();
  const bool equal = k == g1 && k == g2;
  if (ctx.records()) {
    ctx.kv("kernels_equal", true_false(equal));
    ctx.kv("order_1", g1.str());
    ctx.kv("order_2", g2.str());
    ctx.kv("subdirect_order", k.str());
  } else {
    ctx.out << (equal ? "equal" : "distinct") << "; |G(" << d1.name() << ")| = " << g1.str()
            << ", |G(" << d2.name() << ")| = " << g2.str() << ", subdirect order " << k.str()
            << '\n';
  }
  if (!witness)
    return;

  auto report = [&](const std::string &label, const Word &w) {
    const auto e1 = evaluate(w, d1.sigma_x(), d1.sigma_y());
    const auto e2 = evaluate(w, d2.sigma_x(), d2.sigma_y());
    if (ctx.records()) {
      ctx.kv(label, w.to_string());
      ctx.kv(label + "_image_1", to_cycle_string(e1));
      ctx.kv(label + "_image_2", to_cycle_string(e2));
    } else {
      ctx.out << label << " " << w.to_string() << ": " << d1.name() << "(" << label
              << ") = " << (e1.is_identity() ? "e" : to_cycle_string(e1)) << ", " << d2.name()
              << "(" << label << ") = " << (e2.is_identity() ? "e" : to_cycle_string(e2)) << '\n';
    }
  };
  if (!equal) {
    if (auto w = distinguishing_witness(d1, d2, budget))
      report("witness", *w);
  }
  if (d1.degree() == d2.degree())
    report("reference", reference_witness());
}

void cmd_orbit(const Context &ctx, const std::vector<std::string> &files, bool witness,
               std::uint64_t budget) {
  std::vector<Dessin> ds;
  for (const auto &f : files)
    ds.push_back(read_dessin_file(f));
  const auto r = orbit_report(ds, witness, budget);
  const std::size_t m = r.dessins.size();

  if (ctx.records()) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto &s = r.dessins[i];
      const std::string p = "dessin." + std::to_string(i + 1) + ".";
      ctx.kv(p + "name", s.name);
      ctx.kv(p + "passport", passport_records(s.passport));
      ctx.kv(p + "genus", std::to_string(s.genus));
      ctx.kv(p + "monodromy_order", s.monodromy_order.str());
      ctx.kv(p + "cover_degree", s.cover_degree.str());
      ctx.kv(p + "cover_genus", s.cover_genus.str());
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::string p = "pair." + std::to_string(i + 1) + "." + std::to_string(j + 1) + ".";
        ctx.kv(p + "isomorphic", true_false(r.isomorphic[i][j]));
        ctx.kv(p + "kernels_equal", true_false(r.kernels_equal[i][j]));
        ctx.kv(p + "subdirect_order", r.subdirect_orders[i][j].str());
      }
    for (const auto &w : r.witnesses)
      ctx.kv("witness." + std::to_string(w.i + 1) + "." + std::to_string(w.j + 1),
             w.word.to_string());
    return;
  }

  ctx.out << "name\tpassport\tgenus\tmonodromy order\tcover degree\tcover genus\n";
  for (const auto &s : r.dessins)
    ctx.out << s.name << '\t' << s.passport.to_string() << '\t' << s.genus << '\t'
            << s.monodromy_order.str() << '\t' << s.cover_degree.str() << '\t'
            << s.cover_genus.str() << '\n';
  auto matrix = [&](const std::string &title, const std::vector<std::vector<bool>> &mat) {
    ctx.out << '\n' << title << '\n';
    for (std::size_t i = 0; i < m; ++i) {
      ctx.out << r.dessins[i].name;
      for (std::size_t j = 0; j < m; ++j)
        ctx.out << '\t' << (mat[i][j] ? '=' : '.');
      ctx.out << '\n';
    }
  };
  matrix("isomorphic", r.isomorphic);
  matrix("kernels equal", r.kernels_equal);
  ctx.out << "\nsubdirect orders\n";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      ctx.out << r.dessins[i].name << ", " << r.dessins[j].name << ": "
              << r.subdirect_orders[i][j].str() << '\n';
  for (const auto &w : r.witnesses)
    ctx.out << "witness " << r.dessins[w.i].name << " / " << r.dessins[w.j].name << ": "
            << w.word.to_string() << '\n';
}

void cmd_enum(const Context &ctx, const std::string &passport_text, std::optional<long long> genus_filter,
              std::size_t cap_degree, const std::string &out_dir) {
  const Passport p = Passport::parse(passport_text);
  auto found = enumerate_by_passport(p, cap_degree);
  if (genus_filter)
    std::erase_if(found, [&](const Dessin &d) { return genus(d) != *genus_filter; });
  if (!out_dir.empty())
    std::filesystem::create_directories(out_dir);

  if (ctx.records())
    ctx.kv("count", std::to_string(found.size()));
  else
    ctx.out << found.size() << " dessin(s) with passport " << p.to_string() << '\n';
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Dessin d = found[i].with_name("d" + std::to_string(i + 1));
    const auto g = monodromy_group(d);
    if (ctx.records()) {
      const std::string pre = d.name() + ".";
      ctx.kv(pre + "x", to_cycle_string(d.sigma_x()));
      ctx.kv(pre + "y", to_cycle_string(d.sigma_y()));
      ctx.kv(pre + "genus", std::to_string(genus(d)));
      ctx.kv(pre + "monodromy_order", g.order().str());
      ctx.kv(pre + "full_symmetric", true_false(g.is_full_symmetric()));
    } else {
      ctx.out << d.name() << ": x " << to_cycle_string(d.sigma_x()) << ", y "
              << to_cycle_string(d.sigma_y()) << ", genus " << genus(d) << ", monodromy order "
              << g.order().str() << (g.is_full_symmetric() ? " (full symmetric)" : "") << '\n';
    }
    if (!out_dir.empty())
      write_dessin_file(std::filesystem::path(out_dir) / d.name(), d);
  }
}

void cmd_word_eval(const Context &ctx, const std::string &file, const std::string &word_text) {
  const Dessin d = read_dessin_file(file);
  const Word w = parse_word(word_text);
  const auto p = evaluate(w, d.sigma_x(), d.sigma_y());
  if (ctx.records()) {
    ctx.kv("word", w.to_string());
    ctx.kv("image", to_cycle_string(p));
    ctx.kv("identity", true_false(p.is_identity()));
  } else {
    ctx.out << to_cycle_string(p) << '\n';
  }
}

void cmd_coset_enum(const Context &ctx, const std::string &relators_text, std::uint64_t cap) {
  Presentation pres;
  pres.cap = static_cast<std::size_t>(cap);
  for (const auto &r : split_top_level(relators_text))
    pres.relators.push_back(parse_word(r));
  const auto result = coset_enumerate(pres);
  if (ctx.records()) {
    ctx.kv("index", std::to_string(result.index));
    ctx.kv("x", to_cycle_string(result.action.sigma_x()));
    ctx.kv("y", to_cycle_string(result.action.sigma_y()));
  } else {
    ctx.out << "index " << result.index << '\n';
    ctx.out << "x " << to_cycle_string(result.action.sigma_x()) << '\n';
    ctx.out << "y " << to_cycle_string(result.action.sigma_y()) << '\n';
  }
}

void print_inclusion(const Context &ctx, const Inclusion &inc, std::size_t n) {
  if (ctx.records()) {
    const std::string pre = "inclusion." + std::to_string(n) + ".";
    ctx.kv(pre + "super", inc.super.to_string());
    ctx.kv(pre + "index", std::to_string(inc.index));
    if (inc.generator_images)
      ctx.kv(pre + "images", (*inc.generator_images)[0].to_string() + ";" +
                                 (*inc.generator_images)[1].to_string() + ";" +
                                 (*inc.generator_images)[2].to_string());
    return;
  }
  ctx.out << "  " << inc.to_string();
  if (inc.generator_images)
    ctx.out << ": x = " << (*inc.generator_images)[0] << ", y = " << (*inc.generator_images)[1]
            << ", z = " << (*inc.generator_images)[2];
  ctx.out << '\n';
}

void cmd_maximal(const Context &ctx, const std::string &type_text) {
  const auto t = TriangleType::parse(type_text);
  const auto result = is_maximal(t);
  if (ctx.records()) {
    ctx.kv("type", t.to_string());
    ctx.kv("maximal", true_false(result.maximal));
  } else {
    ctx.out << t.to_string() << (result.maximal ? " is maximal" : " is not maximal") << '\n';
  }
  for (std::size_t i = 0; i < result.inclusions.size(); ++i)
    print_inclusion(ctx, result.inclusions[i], i + 1);
}

void cmd_normality(const Context &ctx, const std::string &file, const std::string &inclusion_text) {
  const auto colon = inclusion_text.find(':');
  if (colon == std::string::npos)
    throw DomainError("--inclusion expects 'p,q,r:p2,q2,r2'");
  const auto sub = TriangleType::parse(inclusion_text.substr(0, colon));
  const auto super = TriangleType::parse(inclusion_text.substr(colon + 1));
  const auto candidates = is_maximal(sub).inclusions;
  auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Inclusion &inc) {
    return inc.super.same_up_to_order(super);
  });
  if (it == candidates.end())
    throw DomainError("no inclusion " + sub.to_string() + " < " + super.to_string() +
                      " in the table");
  const Dessin d = read_dessin_file(file);
  const bool normal = normal_in_supergroup(d, *it);
  if (ctx.records()) {
    ctx.kv("inclusion", it->to_string());
    ctx.kv("normal", true_false(normal));
  } else {
    ctx.out << "inclusion " << it->to_string() << '\n';
    for (const auto &c : it->coset_action)
      ctx.out << "  conjugation by " << c.representative << " (x -> " << c.image_x << ", y -> "
              << c.image_y << "): "
              << (extends_to_automorphism(d.sigma_x(), d.sigma_y(), c.image_x, c.image_y)
                      ? "extends to an automorphism"
                      : "does not extend")
              << '\n';
    ctx.out << d.name() << (normal ? " is normal in " : " is not normal in ")
            << it->super.to_string() << '\n';
  }
}

void cmd_export_dot(const Context &ctx, const std::string &file, const std::string &out_path) {
  const Dessin d = read_dessin_file(file);
  const std::string dot = export_dot(d);
  if (out_path.empty()) {
    ctx.out << dot;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot write '" + out_path + "'");
  out << dot;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Dessins d'enfants as permutation pairs: monodromy, covers, kernels, triangle groups"};
  app.name(args.empty() ? "dessin" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "records"}))
      ->capture_default_str();

  std::string file, file_b, out_path, word_text, passport_text, relators_text, type_text,
      inclusion_text;
  std::vector<std::string> files;
  std::uint64_t cap = 0, budget = 0;
  std::size_t cap_degree = default_enumeration_degree_cap;
  long long genus_value = 0;
  bool witness = false;

  auto *info = app.add_subcommand("info", "Degree, passport, genus, monodromy order, regularity");
  info->add_option("FILE", file)->required();

  auto *cover = app.add_subcommand("cover", "Regular cover of a dessin");
  cover->add_option("FILE", file)->required();
  cover->add_option("-o,--output", out_path, "Write the cover here instead of stdout");
  cover->add_option("--cap", cap, "Maximum monodromy group order");

  auto *qc = app.add_subcommand("quotient-center", "Regular cover, center, and central quotient");
  qc->add_option("FILE", file)->required();
  qc->add_option("-o,--output", out_path, "Write the central quotient here");
  qc->add_option("--cap", cap, "Maximum monodromy group order");

  auto *iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("A", file)->required();
  iso->add_option("B", file_b)->required();

  auto *kernels = app.add_subcommand("kernels", "Compare the kernels of two monodromy actions");
  kernels->add_option("A", file)->required();
  kernels->add_option("B", file_b)->required();
  kernels->add_flag("--witness", witness, "Produce a distinguishing word");
  kernels->add_option("--budget", budget, "Sift budget for the witness search");

  auto *orbit = app.add_subcommand("orbit", "Pairwise isomorphism and kernel report");
  orbit->add_option("FILES", files)->required();
  orbit->add_flag("--witness", witness, "Produce witnesses for distinct pairs");
  orbit->add_option("--budget", budget, "Sift budget for the witness search");

  auto *en = app.add_subcommand("enum", "Enumerate dessins with a given passport");
  en->add_option("--passport", passport_text, "\"PX|PY|PZ\", e.g. \"2^2 1 1|3 2 1|6\"")->required();
  auto *genus_opt = en->add_option("--genus", genus_value, "Keep only this genus");
  en->add_option("--cap-degree", cap_degree, "Largest degree to enumerate")->capture_default_str();
  en->add_option("-o,--output", out_path, "Directory to write d1, d2, ... into");

  auto *we = app.add_subcommand("word-eval", "Evaluate a word under a dessin's monodromy");
  we->add_option("FILE", file)->required();
  we->add_option("WORD", word_text)->required();

  auto *ce = app.add_subcommand("coset-enum", "Coset enumeration of <x, y | relators>");
  ce->add_option("--relators", relators_text, "Comma-separated words, e.g. \"x^3,y^2,[x,x^y]\"")
      ->required();
  ce->add_option("--cap", cap, "Maximum number of live cosets");

  auto *mx = app.add_subcommand("maximal", "Triangle-group maximality");
  mx->add_option("--type", type_text, "p,q,r")->required();

  auto *nm = app.add_subcommand("normality", "Is a regular dessin normal in a larger triangle group?");
  nm->add_option("FILE", file)->required();
  nm->add_option("--inclusion", inclusion_text, "sub:super, e.g. 6,4,6:6,8,2")->required();

  auto *dot = app.add_subcommand("export-dot", "Graphviz rendering of the bipartite graph");
  dot->add_option("FILE", file)->required();
  dot->add_option("-o,--output", out_path, "Write DOT here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return 2;
  }

  Context ctx{out, format == "records" ? Format::records : Format::plain};
  try {
    const auto pick = [](std::uint64_t flag, std::uint64_t fallback) {
      return flag ? flag : env_cap(fallback);
    };
    if (*info)
      cmd_info(ctx, file);
    else if (*cover)
      cmd_cover(ctx, file, out_path, pick(cap, default_element_cap));
    else if (*qc)
      cmd_quotient_center(ctx, file, out_path, pick(cap, default_element_cap));
    else if (*iso)
      cmd_iso(ctx, file, file_b);
    else if (*kernels)
      cmd_kernels(ctx, file, file_b, witness, pick(budget, default_witness_budget));
    else if (*orbit)
      cmd_orbit(ctx, files, witness, pick(budget, default_witness_budget));
    else if (*en)
      cmd_enum(ctx, passport_text,
               genus_opt->count() ? std::optional<long long>(genus_value) : std::nullopt,
               cap_degree, out_path);
    else if (*we)
      cmd_word_eval(ctx, file, word_text);
    else if (*ce)
      cmd_coset_enum(ctx, relators_text, pick(cap, default_coset_cap));
    else if (*mx)
      cmd_maximal(ctx, type_text);
    else if (*nm)
      cmd_normality(ctx, file, inclusion_text);
    else if (*dot)
      cmd_export_dot(ctx, file, out_path);
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace dessins
