#include "witt/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "witt/dloc.hpp"
#include "witt/json_io.hpp"
#include "witt/sympoisson.hpp"
#include "witt/text.hpp"

namespace witt::cli {

namespace {

// "@path" reads the payload from a file.
std::string payload(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw DomainError("cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  bool json = false;
  std::ostream& out;

  void emit(const Json& value, const std::string& text) const {
    if (json) {
      Json j{{"version", kVersion}, {"result", value}};
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string invariant_text(const OrbitInvariant& inv) {
  std::string s;
  for (const auto& c : inv.components) {
    if (!s.empty()) s += "\n";
    s += "order=" + std::to_string(c.order);
    if (c.at_origin) s += " at_origin";
    if (c.value) s += " value=" + c.value->str();
    if (c.leading) s += " leading=" + c.leading->str();
  }
  return s;
}

std::string code_text(const ClassificationCode& c) {
  std::string s = c.code;
  if (c.code == "W(f)") {
    s += " f=";
    std::string roots;
    for (const auto& [x, m] : c.f.roots()) {
      roots += "(t - " + x.str() + ")";
      if (m != 1) roots += "^" + std::to_string(m);
    }
    s += roots.empty() ? "1" : roots;
  }
  for (auto [name, v] : {std::pair{"x", &c.x}, {"y", &c.y}, {"alpha", &c.alpha}, {"beta", &c.beta}})
    if (*v) s += std::string(" ") + name + "=" + (*v)->str();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Witt and Virasoro algebras", "witt"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<void(const Output&)> action;
  auto on = [&](CLI::App* sub, std::function<void(const Output&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  // bracket
  std::string a, b, algebra = "W", gamma = "0", chi_a, chi_b, seq;
  int dmax = 10, bound = 6, prange = 8;
  std::string lifts_json;
  auto* br = app.add_subcommand("bracket", "Lie bracket of two elements");
  br->add_option("a", a)->required();
  br->add_option("b", b)->required();
  br->add_option("--algebra", algebra);
  on(br, [&](const Output& o) {
    AlgebraTag tag = parse_tag(algebra);
    VirElement r = bracket(parse_vir_element(a, tag), parse_vir_element(b, tag));
    std::string s = format_vir_element(r);
    o.emit(s, s);
  });

  auto* po = app.add_subcommand("poisson", "Poisson bracket in the symmetric algebra");
  po->add_option("p", a)->required();
  po->add_option("q", b)->required();
  po->add_option("--algebra", algebra);
  on(po, [&](const Output& o) {
    std::string s = format_sympoly(poisson_bracket(parse_sympoly(a), parse_sympoly(b), parse_tag(algebra)));
    o.emit(s, s);
  });

  auto* pg = app.add_subcommand("pgamma", "Image under p_gamma and membership in J(gamma)");
  pg->add_option("p", a)->required();
  pg->add_option("--gamma", gamma);
  on(pg, [&](const Output& o) {
    SymPoly p = parse_sympoly(a);
    Rational g = Rational::parse(gamma);
    std::string s = format_bpoly(p_gamma_map(p, g));
    o.emit(Json{{"image", s}, {"in_J", j_gamma_member(p, g)}}, s);
  });

  auto* ev = app.add_subcommand("eval", "Evaluate a local function on an element");
  ev->add_option("chi", chi_a)->required();
  ev->add_option("u", a)->required();
  on(ev, [&](const Output& o) {
    LocalFunction chi = local_function_from_json(parse_json(payload(chi_a)));
    Rational r = eval_local(chi, parse_vir_element(a, chi.tag()));
    o.emit(to_json(r), r.str());
  });

  auto* rk = app.add_subcommand("rank", "Rank of B_chi");
  rk->add_option("chi", chi_a)->required();
  on(rk, [&](const Output& o) {
    int r = rank_b(local_function_from_json(parse_json(payload(chi_a))));
    o.emit(r, std::to_string(r));
  });

  auto* lo = app.add_subcommand("locality", "Minimal recurrence of a sequence chi(t^i d)");
  lo->add_option("sequence", seq)->required();
  lo->add_option("--dmax", dmax);
  on(lo, [&](const Output& o) {
    auto h = recurrence_detect(parse_rational_list(payload(seq)), dmax);
    if (h)
      o.emit(format_laurent(*h), format_laurent(*h));
    else
      o.emit(nullptr, "none");
  });

  auto* ca = app.add_subcommand("canonicalize", "Canonical form of each component, with witness");
  ca->add_option("chi", chi_a)->required();
  on(ca, [&](const Output& o) {
    LocalFunction chi = local_function_from_json(parse_json(payload(chi_a)));
    if (chi.is_zero()) throw DomainError("the zero functional has no canonical form");
    Json comps = Json::array();
    std::string text;
    for (const auto& p : chi.points()) {
      CanonicalForm cf = canonicalize(p, chi.tag());
      comps.push_back(to_json(cf));
      if (!text.empty()) text += "\n";
      text += "x=" + p.x.str() + " order=" + std::to_string(cf.order) + " c=" + cf.c.str();
      if (cf.b) text += " b=" + cf.b->str();
    }
    o.emit(comps, text);
  });

  auto* oe = app.add_subcommand("orbit-eq", "Whether two local functions share a pseudo-orbit");
  oe->add_option("a", chi_a)->required();
  oe->add_option("b", chi_b)->required();
  on(oe, [&](const Output& o) {
    bool r = orbit_equal(local_function_from_json(parse_json(payload(chi_a))),
                         local_function_from_json(parse_json(payload(chi_b))));
    o.emit(r, bool_text(r));
  });

  auto* od = app.add_subcommand("orbit-dim", "Dimension of the pseudo-orbit");
  od->add_option("chi", chi_a)->required();
  on(od, [&](const Output& o) {
    int r = orbit_dim(local_function_from_json(parse_json(payload(chi_a))));
    o.emit(r, std::to_string(r));
  });

  auto* oi = app.add_subcommand("orbit-invariant", "Complete pseudo-orbit invariant");
  oi->add_option("chi", chi_a)->required();
  on(oi, [&](const Output& o) {
    OrbitInvariant inv = orbit_invariant(local_function_from_json(parse_json(payload(chi_a))));
    o.emit(to_json(inv), invariant_text(inv));
  });

  auto* cs = app.add_subcommand("classify-subalg", "Table row of a subalgebra of codimension <= 3");
  cs->add_option("presentation", chi_a)->required();
  on(cs, [&](const Output& o) {
    ClassificationCode c = classify(presentation_from_json(parse_json(payload(chi_a))));
    o.emit(to_json(c), code_text(c));
  });

  auto* ez = app.add_subcommand("express-z", "Write z as a combination of brackets of f t^p d + lambda_p z");
  ez->add_option("f", a)->required();
  ez->add_option("--lifts", lifts_json, "JSON object {\"p\": \"lambda_p\"}");
  ez->add_option("--prange", prange, "Use p in [-prange, prange] with lambda_p = 0 when no lifts are given");
  on(ez, [&](const Output& o) {
    LaurentQ f = parse_laurent(a);
    std::map<int, Rational> lifts;
    if (!lifts_json.empty()) {
      Json j = parse_json(payload(lifts_json));
      if (!j.is_object()) throw ParseError("lifts must be a JSON object", j.dump(), 0);
      for (const auto& [k, v] : j.items()) {
        try {
          lifts[std::stoi(k)] = rational_from_json(v);
        } catch (const std::logic_error&) {
          throw ParseError("lift keys are integers", k, 0);
        }
      }
    } else {
      for (int p = -prange; p <= prange; ++p) lifts[p] = Rational(0);
    }
    ZExpression e = vir_express_z(f, lifts);
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& t : e.terms)
      terms.emplace_back(t.coeff, "[v_" + std::to_string(t.p) + ", v_" + std::to_string(t.q) + "]");
    Json j = to_json(e);
    j["value"] = format_vir_element(evaluate(e, lifts));
    o.emit(j, text::format_sum(terms));
  });

  auto* wy = app.add_subcommand("weyl", "Localized Weyl algebra");
  wy->require_subcommand(1);
  auto* wm = wy->add_subcommand("mul", "Normal-ordered product");
  wm->add_option("a", a)->required();
  wm->add_option("b", b)->required();
  on(wm, [&](const Output& o) {
    std::string s = format_weyl(weyl_mul(parse_weyl(a), parse_weyl(b)));
    o.emit(s, s);
  });
  auto* wp = wy->add_subcommand("pi", "Image of f d under pi_gamma");
  wp->add_option("u", a)->required();
  wp->add_option("--gamma", gamma);
  on(wp, [&](const Output& o) {
    WeylElement w = pi_gamma(parse_vir_element(a, AlgebraTag::W), Rational::parse(gamma));
    std::string s = format_weyl(w);
    o.emit(Json{{"image", s},
                {"in_im_pi0", pi_image_test(w, PiImage::Pi0)},
                {"in_im_pi1", pi_image_test(w, PiImage::Pi1)}},
           s);
  });
  auto* wa = wy->add_subcommand("act", "Action on N_x; with --gamma the element is a field f acting through pi_gamma");
  wa->add_option("a", a)->required();
  wa->add_option("v", chi_a)->required();
  auto* wa_gamma = wa->add_option("--gamma", gamma);
  on(wa, [&, wa_gamma](const Output& o) {
    NVector v = nvector_from_json(parse_json(payload(chi_a)));
    NVector r = wa_gamma->count() > 0
                    ? w_act_N_gamma(parse_vir_element(a, AlgebraTag::W), v, Rational::parse(gamma))
                    : weyl_act_N(parse_weyl(a), v);
    Json j = to_json(r);
    o.emit(j, j.dump());
  });
  auto* wsp = wy->add_subcommand("span", "Bounded cyclic span in N_x^gamma");
  wsp->add_option("v", chi_a)->required();
  wsp->add_option("--gamma", gamma);
  wsp->add_option("--bound", bound);
  on(wsp, [&](const Output& o) {
    SpanReport rep = cyclic_span(nvector_from_json(parse_json(payload(chi_a))), Rational::parse(gamma), bound);
    o.emit(Json{{"dimension", rep.dimension}, {"delta_reached", rep.delta_reached}, {"bound", bound}},
           "dimension=" + std::to_string(rep.dimension) + " delta_reached=" + bool_text(rep.delta_reached));
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    action(Output{format == "json", out});
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace witt::cli
