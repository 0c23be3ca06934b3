#include "dhgb/session.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace dhgb {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  int line;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  int col() const { return static_cast<int>(i) + 1; }
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col()); }
};

std::string read_ident(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    ++c.i;
  if (c.i == start) c.fail("expected identifier");
  return c.s.substr(start, c.i - start);
}

unsigned long read_uint(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected integer");
  return std::stoul(c.s.substr(start, c.i - start));
}

// expr: term ((+|-) term)* ; term: factor ((*|ws) factor)* ;
// factor: uint [/ uint] | var [^ uint]
Poly parse_expr(const std::string& text, int line, const Ctx& ctx) {
  Cursor c{text, 0, line};
  Poly result(ctx);
  const FieldSpec& field = ctx->field;

  bool first = true;
  while (!c.done()) {
    Scalar sign = Scalar::one(field);
    c.skip_ws();
    if (c.s[c.i] == '+' || c.s[c.i] == '-') {
      if (c.s[c.i] == '-') sign = -sign;
      ++c.i;
    } else if (!first) {
      c.fail("expected + or - between terms");
    }
    first = false;

    Scalar coeff = sign;
    Mono mono = identity_mono(*ctx);
    bool any_factor = false;
    while (true) {
      c.skip_ws();
      if (c.i >= c.s.size() || c.s[c.i] == '+' || c.s[c.i] == '-') break;
      if (c.s[c.i] == '*') {
        if (!any_factor) c.fail("unexpected *");
        ++c.i;
        c.skip_ws();
      }
      if (std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        unsigned long num = read_uint(c);
        unsigned long den = 1;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '/') {
          ++c.i;
          den = read_uint(c);
          if (den == 0) c.fail("zero denominator");
        }
        coeff = coeff * Scalar::from_fraction(static_cast<long>(num),
                                              static_cast<long>(den), field);
      } else if (std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_') {
        int vcol = c.col();
        std::string name = read_ident(c);
        std::size_t idx;
        try {
          idx = ctx->index_of(name);
        } catch (const context_error&) {
          throw parse_error("unknown variable: " + name, line, vcol);
        }
        unsigned long exp = 1;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '^') {
          ++c.i;
          exp = read_uint(c);
        }
        if (ctx->kind == RingKind::Commutative) {
          mono.data[idx] += static_cast<std::uint32_t>(exp);
        } else {
          for (unsigned long k = 0; k < exp; ++k)
            mono.data.push_back(static_cast<std::uint32_t>(idx));
        }
      } else {
        c.fail(std::string("unexpected character '") + c.s[c.i] + "'");
      }
      any_factor = true;
    }
    if (!any_factor) c.fail("empty term");
    result.add_term(mono, coeff);
  }
  return result;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

Session parse_session(std::istream& in) {
  Session s;
  FieldSpec field;
  std::optional<RingKind> kind;
  std::vector<std::string> vars;
  std::vector<unsigned> weights;
  std::vector<std::string> order_names;
  std::optional<std::string> homvar_name;
  std::vector<std::tuple<int, std::string, std::string>> poly_lines;  // line, name, expr

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    if (kw == "field") {
      if (words.size() == 2 && words[1] == "Q") {
        field = {FieldSpec::Kind::Rationals, 0};
      } else if (words.size() == 3 && words[1] == "GF") {
        std::uint64_t p = std::stoull(words[2]);
        if (!is_prime_u64(p)) throw parse_error(words[2] + " is not prime", lineno, 1);
        field = {FieldSpec::Kind::Prime, p};
      } else {
        throw parse_error("expected 'field Q' or 'field GF <p>'", lineno, 1);
      }
    } else if (kw == "vars" || kw == "ncvars") {
      if (words.size() < 2) throw parse_error("no variables declared", lineno, 1);
      kind = kw == "vars" ? RingKind::Commutative : RingKind::Noncommutative;
      vars.assign(words.begin() + 1, words.end());
    } else if (kw == "weights") {
      weights.clear();
      for (std::size_t i = 1; i < words.size(); ++i) {
        unsigned long w = std::stoul(words[i]);
        if (w == 0) throw parse_error("weights must be positive", lineno, 1);
        weights.push_back(static_cast<unsigned>(w));
      }
    } else if (kw == "order") {
      if (words.size() < 2 || words[1] != "deglex")
        throw parse_error("only 'order deglex <vars>' is supported", lineno, 1);
      order_names.assign(words.begin() + 2, words.end());
    } else if (kw == "homvar") {
      if (words.size() != 2) throw parse_error("expected 'homvar <name>'", lineno, 1);
      homvar_name = words[1];
    } else if (kw == "poly") {
      auto eq = raw.find('=');
      if (eq == std::string::npos) throw parse_error("expected 'poly <name> = <expr>'", lineno, 1);
      std::string head = raw.substr(0, eq);
      auto hw = split_words(head);
      if (hw.size() != 2) throw parse_error("expected 'poly <name> = <expr>'", lineno, 1);
      poly_lines.emplace_back(lineno, hw[1], raw.substr(eq + 1));
    } else {
      throw parse_error("unknown directive: " + kw, lineno, 1);
    }
  }

  if (!kind) throw parse_error("no 'vars' or 'ncvars' declaration", lineno, 1);
  try {
    s.ctx = make_context(*kind, vars, weights, field);
  } catch (const domain_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }

  if (order_names.empty()) {
    s.ord = default_ordering(*s.ctx);
  } else {
    if (order_names.size() != vars.size())
      throw parse_error("ordering must list every variable", lineno, 1);
    std::vector<bool> seen(vars.size(), false);
    for (const auto& n : order_names) {
      std::size_t idx;
      try {
        idx = s.ctx->index_of(n);
      } catch (const context_error&) {
        throw parse_error("unknown variable in ordering: " + n, lineno, 1);
      }
      if (seen[idx]) throw parse_error("duplicate variable in ordering: " + n, lineno, 1);
      seen[idx] = true;
      s.ord.precedence.push_back(idx);
    }
  }

  if (homvar_name) {
    std::size_t idx;
    try {
      idx = s.ctx->index_of(*homvar_name);
    } catch (const context_error&) {
      throw parse_error("homvar is not a declared variable: " + *homvar_name, lineno, 1);
    }
    if (s.ctx->weights[idx] != 1)
      throw parse_error("homvar must have weight 1", lineno, 1);
    if (*kind == RingKind::Commutative && idx != vars.size() - 1)
      throw parse_error("homvar must be the last declared variable", lineno, 1);
    s.homvar = idx;
  }

  for (auto& [ln, name, expr] : poly_lines) {
    for (const auto& [n, p] : s.polys)
      if (n == name) throw parse_error("duplicate polynomial name: " + name, ln, 1);
    s.polys.emplace_back(name, parse_expr(expr, ln, s.ctx));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------------

namespace {

struct Options {
  std::string cmd;
  std::optional<std::size_t> asvar;
  unsigned maxdeg = 10;
  std::optional<unsigned> degree_bound;
  bool trace = false;
  bool element = false;
  bool ideal = false;
};

Options parse_args(const Session& s, const std::vector<std::string>& args) {
  Options o;
  std::size_t i = 0;
  if (i < args.size() && args[i] == "asvar") {
    if (i + 1 >= args.size()) throw precondition_error("asvar needs a variable name");
    o.asvar = s.ctx->index_of(args[i + 1]);
    i += 2;
  }
  if (i >= args.size()) throw precondition_error("no command given");
  o.cmd = args[i++];
  while (i < args.size()) {
    const std::string& a = args[i];
    if (a == "--maxdeg" && i + 1 < args.size()) {
      o.maxdeg = static_cast<unsigned>(std::stoul(args[++i]));
    } else if (a == "--degree-bound" && i + 1 < args.size()) {
      o.degree_bound = static_cast<unsigned>(std::stoul(args[++i]));
    } else if (a == "--trace") {
      o.trace = true;
    } else if (a == "--element") {
      o.element = true;
    } else if (a == "--ideal") {
      o.ideal = true;
    } else {
      throw precondition_error("unknown option: " + a);
    }
    ++i;
  }
  return o;
}

void print_basis(std::ostream& os, const GroebnerBasis& gb, const std::string& label) {
  os << label << " (" << gb.elems.size() << " element"
     << (gb.elems.size() == 1 ? "" : "s") << ")";
  if (gb.degree_bound && !gb.complete)
    os << " [INCOMPLETE at degree bound " << *gb.degree_bound << "]";
  os << ":\n";
  for (std::size_t i = 0; i < gb.elems.size(); ++i)
    os << "  g" << (i + 1) << " = " << gb.elems[i].str(gb.ord) << "\n";
}

void print_dims(std::ostream& os, const std::string& label,
                const std::vector<std::size_t>& dims) {
  os << label << ":";
  for (auto d : dims) os << " " << d;
  os << "\n";
}

struct Engines {
  // Exactly one of the two is populated when a homogenization variable is in
  // force; neither when the session is a plain ring.
  std::optional<CentralDhContext> central;
  std::optional<NoncentralDhContext> noncentral;
  std::vector<std::pair<std::string, Poly>> ext_polys;  // session polys, extended ring
  std::string note;  // reordering report for the noncentral case
};

Engines make_engines(const Session& s, const Options& o) {
  Engines e;
  std::optional<std::size_t> hv = o.asvar ? o.asvar : s.homvar;
  if (!hv) return e;
  if (s.ctx->kind == RingKind::Commutative) {
    e.central = treat_variable_as_t(s.ctx, s.ord, *hv);
    for (const auto& [n, p] : s.polys)
      e.ext_polys.emplace_back(n, into_extended(*e.central, p));
  } else {
    e.noncentral = treat_variable_as_T(s.ctx, s.ord, *hv);
    if (!s.ord.precedence.empty() && s.ord.precedence.front() != *hv)
      e.note = "note: " + s.ctx->vars[*hv] + " reordered to lowest precedence\n";
    for (const auto& [n, p] : s.polys)
      e.ext_polys.emplace_back(n, into_extended_nc(*e.noncentral, p));
  }
  if (o.asvar)
    e.note = "asvar: treating " + s.ctx->vars[*hv] +
             " as the homogenization variable\n" + e.note;
  return e;
}

std::vector<Poly> values(const std::vector<std::pair<std::string, Poly>>& nps) {
  std::vector<Poly> out;
  for (const auto& [n, p] : nps) out.push_back(p);
  return out;
}

// A session polynomial that must live in the base ring: reject any use of the
// homogenization variable, then strip it.
Poly to_base_central(const CentralDhContext& dh, const Poly& p, const std::string& name) {
  for (const auto& [m, c] : p.terms())
    if (m.data.back() != 0)
      throw precondition_error("polynomial " + name + " uses the homogenization variable");
  return dehomogenize(dh, p);
}

Poly to_base_noncentral(const NoncentralDhContext& dh, const Poly& p, const std::string& name) {
  std::uint32_t t = static_cast<std::uint32_t>(*dh.ext->homog_var);
  for (const auto& [m, c] : p.terms())
    for (auto l : m.data)
      if (l == t)
        throw precondition_error("polynomial " + name + " uses the homogenization variable");
  return dehomogenize_nc(dh, p);
}

unsigned need_bound(const Options& o) {
  if (!o.degree_bound)
    throw precondition_error("--degree-bound is mandatory for noncommutative completion");
  return *o.degree_bound;
}

void append_verification_traces(std::ostream& os, const GroebnerBasis& gb,
                                const VerifyResult& vr) {
  os << "verification traces (" << vr.certificates.size() << "):\n";
  for (const auto& tr : vr.certificates) os << trace_str(tr, gb.elems, gb.ord);
}

}  // namespace

CommandResult run_command(const Session& s, const std::vector<std::string>& args) {
  Options o = parse_args(s, args);
  Engines e = make_engines(s, o);
  const bool comm = s.ctx->kind == RingKind::Commutative;
  std::ostringstream os;
  os << e.note;

  auto require_dh = [&]() {
    if (!e.central && !e.noncentral)
      throw precondition_error("command needs a homogenization variable (homvar or asvar)");
  };

  auto compute_gb = [&]() -> GroebnerBasis {
    if (e.central) return buchberger(values(e.ext_polys), e.central->ord_ext);
    if (e.noncentral) return complete_nc(values(e.ext_polys), e.noncentral->ord_ext, need_bound(o));
    if (comm) return buchberger(values(s.polys), s.ord);
    return complete_nc(values(s.polys), s.ord, need_bound(o));
  };

  if (o.cmd == "gb") {
    GroebnerBasis gb = compute_gb();
    print_basis(os, gb, "groebner basis");
    if (o.trace) {
      VerifyResult vr = comm ? verify_groebner(gb.elems, gb.ord)
                             : verify_groebner_nc(gb.elems, gb.ord, *gb.degree_bound);
      append_verification_traces(os, gb, vr);
    }
  } else if (o.cmd == "homogenize") {
    require_dh();
    for (const auto& [name, p] : e.ext_polys) {
      if (p.is_zero()) throw zero_input_error("homogenize(0) for " + name);
      if (e.central) {
        Poly h = homogenize(*e.central, to_base_central(*e.central, p, name));
        os << name << "* = " << h.str(e.central->ord_ext) << "\n";
      } else {
        Poly h = homogenize_nc(*e.noncentral, to_base_noncentral(*e.noncentral, p, name));
        os << name << "~ = " << h.str(e.noncentral->ord_ext) << "\n";
      }
    }
  } else if (o.cmd == "dehomogenize") {
    require_dh();
    for (const auto& [name, p] : e.ext_polys) {
      if (e.central) {
        os << name << "_* = " << dehomogenize(*e.central, p).str(e.central->ord_base) << "\n";
      } else {
        os << name << "_~ = " << dehomogenize_nc(*e.noncentral, p).str(e.noncentral->ord_base)
           << "\n";
      }
    }
  } else if (o.cmd == "dhcheck") {
    require_dh();
    if (o.element == o.ideal)
      throw precondition_error("dhcheck needs exactly one of --element / --ideal");
    if (o.element) {
      for (const auto& [name, p] : e.ext_polys) {
        bool closed = e.central ? is_dh_closed_element(*e.central, p)
                                : is_dh_closed_element_nc(*e.noncentral, p);
        os << name << ": " << (closed ? "dh-closed" : "NOT dh-closed") << "\n";
      }
    } else if (e.central) {
      auto v = is_dh_closed_ideal(*e.central, values(e.ext_polys));
      if (v.closed)
        os << "dh-closed\n";
      else
        os << "NOT dh-closed; witness LM = " << mono_str(*v.witness, *e.central->ext) << "\n";
    } else {
      auto v = is_dh_closed_ideal_nc(*e.noncentral, values(e.ext_polys), need_bound(o));
      if (v.closed)
        os << "dh-closed (within degree bound " << *o.degree_bound << ")\n";
      else
        os << "NOT dh-closed; witness LM = " << mono_str(*v.witness, *e.noncentral->ext) << "\n";
    }
  } else if (o.cmd == "pipeline") {
    require_dh();
    if (e.central) {
      std::vector<Poly> S;
      for (const auto& [name, p] : e.ext_polys)
        S.push_back(to_base_central(*e.central, p, name));
      auto rep = pipeline_central(*e.central, S);
      os << "pipeline (central homogenization)\n";
      print_basis(os, rep.gb_Sstar, "gb of <S*>");
      print_basis(os, rep.gb_I, "gb of I");
      print_basis(os, rep.gb_Istar, "gb of <I*>");
      os << (rep.ideals_equal ? "comparison: <S*> = <I*>\n"
                              : "comparison: strict inclusion detected, <S*> < <I*>\n");
    } else {
      unsigned bound = need_bound(o);
      std::vector<Poly> S;
      for (const auto& [name, p] : e.ext_polys)
        S.push_back(to_base_noncentral(*e.noncentral, p, name));
      auto rep = pipeline_noncentral(*e.noncentral, S, bound);
      os << "pipeline (noncentral homogenization, degree bound " << bound << ")\n";
      print_basis(os, rep.gb_Stilde, "gb of <S~>");
      print_basis(os, rep.gb_I, "gb of I");
      print_basis(os, rep.gb_Itilde, "gb of <I~>");
      os << (rep.ideals_equal
                 ? "comparison: <S~> = <I~> (within degree bound)\n"
                 : "comparison: strict inclusion detected, <S~> < <I~> (within degree bound)\n");
    }
  } else if (o.cmd == "normal") {
    GroebnerBasis gb = compute_gb();
    Ctx ring = e.central   ? e.central->ext
               : e.noncentral ? e.noncentral->ext
                              : s.ctx;
    auto nm = normal_monomials(gb.elems, ring, gb.ord, o.maxdeg);
    os << "normal monomials up to degree " << o.maxdeg << ":\n";
    for (unsigned p = 0; p < nm.by_degree.size(); ++p) {
      os << "  degree " << p << ":";
      if (nm.by_degree[p].empty()) {
        os << " (none)";
      } else {
        for (const auto& m : nm.by_degree[p]) os << " " << mono_str(m, *ring);
      }
      os << "\n";
    }
    print_dims(os, "dims", nm.dims());
  } else if (o.cmd == "present") {
    require_dh();
    PresentationReport rep;
    const Ctx base = e.central ? e.central->base : e.noncentral->base;
    const OrderingSpec ob = e.central ? e.central->ord_base : e.noncentral->ord_base;
    const OrderingSpec oe = e.central ? e.central->ord_ext : e.noncentral->ord_ext;
    if (e.central) {
      rep = presentation_report_central(*e.central, values(e.ext_polys), o.maxdeg);
    } else {
      rep = presentation_report_noncentral(*e.noncentral, values(e.ext_polys), o.maxdeg,
                                           need_bound(o));
    }
    os << "presentation report (max degree " << o.maxdeg << ")\n";
    auto list = [&](const char* label, const std::vector<Poly>& ps, const OrderingSpec& ord) {
      os << label << ":\n";
      if (ps.empty()) os << "  (none)\n";
      for (const auto& p : ps) os << "  " << p.str(ord) << "\n";
    };
    list("A relations", rep.a_relations, ob);
    list("G(A) relations", rep.graded_relations, ob);
    list("Rees relations", rep.rees_relations, oe);
    print_dims(os, "dims A", rep.dims_a);
    print_dims(os, "dims G(A)", rep.dims_graded);
    print_dims(os, "dims Rees", rep.dims_rees);
  } else {
    throw precondition_error("unknown command: " + o.cmd);
  }
  return {os.str(), 0};
}

CommandResult run_session(std::istream& in, const std::vector<std::string>& args) {
  try {
    Session s = parse_session(in);
    return run_command(s, args);
  } catch (const parse_error& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  } catch (const domain_error& e) {
    return {std::string("error: ") + e.what() + "\n", 1};
  }
}

}  // namespace dhgb
