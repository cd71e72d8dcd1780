#include "ncgalois/presentations.hpp"

#include <algorithm>
#include <set>

namespace ncg {

namespace {

const char* const kPlane = "x*y = p*y*x";

const char* const kGl2 =
    "a*b = q*b*a, a*c = p*c*a, b*d = p*d*b, c*d = q*d*c, b*c = p/q*c*b,"
    "a*d = d*a + (q - p^-1)*b*c,"
    "D*Dinv = 1, Dinv*D = 1";

const char* const kDinvCommutation = "a*Dinv = Dinv*a, d*Dinv = Dinv*d, b*Dinv = q/p*Dinv*b, c*Dinv = p/q*Dinv*c";

const char* const kCotangent =
    "x*xi = p*q*xi*x, x*eta = (p*q - 1)*xi*y + p*eta*x,"
    "y*xi = q*xi*y, y*eta = p*q*eta*y";

const char* const kTangent =
    "x*Dx = (q^-1*p^-1 - 1)*Dy*y + p^-1*q^-1*Dx*x, x*Dy = p^-1*Dy*x,"
    "y*Dx = q^-1*Dx*y, y*Dy = p^-1*q^-1*Dy*y";

const char* const kSmashCross =
    "x*a = p*q*a*x, x*b = p*q*b*x, x*c = (p*q - 1)*a*y + p*c*x, x*d = (p*q - 1)*b*y + p*d*x,"
    "y*a = q*a*y, y*b = q*b*y, y*c = p*q*c*y, y*d = p*q*d*y,"
    "x*Dinv = p^-2*q^-1*Dinv*x, y*Dinv = p^-1*q^-2*Dinv*y";

struct Group {
  const char* text;
  bool hopf_params;  // parse with the (possibly swapped) GL parameters
};

struct PlainSpec {
  std::vector<std::string> generators;
  std::vector<std::string> order;  // empty: declaration order
  std::map<std::string, int> grades;
  std::vector<Group> groups;
};

struct TensorSpec {
  std::vector<std::pair<std::string, bool>> factors;  // name, flips the swap flag
};

const std::map<std::string, PlainSpec>& plain_specs() {
  static const std::map<std::string, PlainSpec> specs = {
      {"quantum_plane", {{"x", "y"}, {}, {}, {{kPlane, false}}}},
      {"gl2", {{"a", "b", "c", "d", "Dinv"}, {}, {}, {{kGl2, true}, {kDinvCommutation, true}}}},
      {"gl2_without_cot", {{"a", "b", "c", "d", "Dinv"}, {}, {}, {{kGl2, true}}}},
      {"cotangent_calculus",
       {{"x", "y", "xi", "eta"}, {}, {{"xi", 1}, {"eta", 1}}, {{kPlane, false}, {kCotangent, false}}}},
      {"cotangent_calculus_left",
       {{"x", "y", "xi", "eta"},
        {"xi", "eta", "x", "y"},
        {{"xi", 1}, {"eta", 1}},
        {{kPlane, false}, {kCotangent, false}}}},
      {"tangent_calculus", {{"x", "y", "Dx", "Dy"}, {}, {{"Dx", 1}, {"Dy", 1}}, {{kPlane, false}, {kTangent, false}}}},
      {"tangent_calculus_left",
       {{"x", "y", "Dx", "Dy"}, {"Dx", "Dy", "x", "y"}, {{"Dx", 1}, {"Dy", 1}}, {{kPlane, false}, {kTangent, false}}}},
      {"frame_bundle",
       {{"x", "y", "a", "b", "c", "d", "Dinv"},
        {"a", "b", "c", "d", "Dinv", "x", "y"},
        {},
        {{kPlane, false}, {kGl2, true}, {kDinvCommutation, true}, {kSmashCross, false}}}},
  };
  return specs;
}

const std::map<std::string, TensorSpec>& tensor_specs() {
  static const std::map<std::string, TensorSpec> specs = {
      {"gl2_tensor_square", {{{"gl2", false}, {"gl2", false}}}},
      {"gl2_tensor_cube", {{{"gl2", false}, {"gl2", false}, {"gl2", false}}}},
      {"gl2_tensor_plane", {{{"gl2", false}, {"quantum_plane", false}}}},
      {"plane_tensor_gl2pq", {{{"quantum_plane", false}, {"gl2", true}}}},
      {"gl2_tensor_cotangent", {{{"gl2", false}, {"cotangent_calculus", false}}}},
      {"gl2_tensor_gl2_plane", {{{"gl2", false}, {"gl2", false}, {"quantum_plane", false}}}},
      {"gl2_tensor_gl2_cotangent", {{{"gl2", false}, {"gl2", false}, {"cotangent_calculus", false}}}},
      {"plane_tensor_gl2", {{{"quantum_plane", false}, {"gl2", false}}}},
      {"plane_tensor_gl2pq_square", {{{"quantum_plane", false}, {"gl2", true}, {"gl2", true}}}},
      {"frame_tensor_H", {{{"frame_bundle", false}, {"gl2", false}}}},
      {"frame_tensor_HH", {{{"frame_bundle", false}, {"gl2", false}, {"gl2", false}}}},
  };
  return specs;
}

bool depends_on_hopf_params(const std::string& name) {
  if (auto it = plain_specs().find(name); it != plain_specs().end())
    return std::any_of(it->second.groups.begin(), it->second.groups.end(), [](const Group& g) { return g.hopf_params; });
  if (auto it = tensor_specs().find(name); it != tensor_specs().end())
    return std::any_of(it->second.factors.begin(), it->second.factors.end(),
                       [](const auto& f) { return depends_on_hopf_params(f.first); });
  return false;
}

}  // namespace

Registry::Registry(Params params) : params_(std::move(params)) {}

const std::vector<std::string>& Registry::builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : plain_specs()) n.push_back(k);
    for (const auto& [k, v] : tensor_specs()) n.push_back(k);
    std::sort(n.begin(), n.end());
    return n;
  }();
  return names;
}

bool Registry::has(const std::string& name) const {
  if (user_.count(name) || name == "ground") return true;
  const auto& n = builtin_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

AlgebraPtr Registry::get(const std::string& name, bool swap) const {
  if (!swap) {
    if (auto it = user_.find(name); it != user_.end()) return it->second;
  }
  if (!has(name) || user_.count(name)) {
    if (user_.count(name)) throw AlgebraError("user algebra '" + name + "' has no swapped variant");
    throw AlgebraError("unknown algebra '" + name + "'");
  }
  if (!depends_on_hopf_params(name)) swap = false;
  auto key = std::make_pair(name, swap);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  AlgebraPtr built = make(name, swap);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, built).first->second;
}

Presentation Registry::builtin(const std::string& name, bool swap) const { return get(name, swap)->presentation(); }

AlgebraPtr Registry::make(const std::string& name, bool swap) const {
  if (name == "ground") return Algebra::ground(params_);
  if (auto it = tensor_specs().find(name); it != tensor_specs().end()) {
    std::vector<AlgebraPtr> factors;
    for (const auto& [fname, flip] : it->second.factors) factors.push_back(get(fname, swap != flip));
    return Algebra::tensor(name, std::move(factors));
  }
  const PlainSpec& spec = plain_specs().at(name);
  Presentation pres;
  pres.name = name;
  pres.params = params_;
  pres.generators = spec.generators;
  pres.precedence = spec.order.empty() ? spec.generators : spec.order;
  pres.grades = spec.grades;
  pres.alphabet = std::make_shared<Alphabet>(pres.precedence);
  Params hopf = swap ? params_.swapped() : params_;
  for (const auto& g : spec.groups) {
    auto rels = parse_relation_list(g.text, pres.alphabet, g.hopf_params ? hopf : params_);
    pres.relations.insert(pres.relations.end(), rels.begin(), rels.end());
  }
  return Algebra::from_presentation(std::move(pres));
}

void Registry::add(Presentation pres) {
  std::string name = pres.name;
  user_[name] = Algebra::from_presentation(std::move(pres));
}

void Registry::load(std::string_view text) {
  Document doc = parse_document(text, params_);
  for (auto& pres : doc.algebras) add(std::move(pres));
  for (const auto& m : doc.morphisms) {
    AlgebraPtr src, tgt;
    try {
      src = get(m.source);
      tgt = get(m.target);
    } catch (const AlgebraError& e) {
      throw ParseError(e.what(), m.line, m.col);
    }
    std::map<std::string, NCPoly> images;
    for (size_t i = 0; i < m.images.size(); ++i) {
      const auto& [g, expr] = m.images[i];
      auto [line, col] = m.image_locations[i];
      if (!src->alphabet()->find(g)) throw ParseError("unknown generator '" + g + "' of " + m.source, line, col);
      images[g] = parse_expression_at(expr, tgt->alphabet(), params_, line, col);
    }
    try {
      morphisms_.insert_or_assign(
          m.name, GenMap(m.name, src, tgt, images, m.anti ? GenMap::Kind::AntiHomomorphism : GenMap::Kind::Homomorphism));
    } catch (const AlgebraError& e) {
      throw ParseError(e.what(), m.line, m.col);
    }
  }
  actions_.insert(actions_.end(), doc.actions.begin(), doc.actions.end());
}

const GenMap& Registry::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw AlgebraError("unknown morphism '" + name + "'");
  return it->second;
}

std::vector<std::string> Registry::morphism_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : morphisms_) out.push_back(k);
  return out;
}

}  // namespace ncg
