#pragma once

#include "diffcat/morphism.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace diffcat {

/// A concrete Cartesian difference category: an infinitesimal extension, a
/// difference combinator and a registry of named primitives.
class Model {
public:
  /// Builds the primitive at a given space; primitives are endomorphisms.
  using PrimitiveFactory = std::function<Morphism(const Space&)>;

  explicit Model(ModelTag tag) : tag_(tag) {}
  virtual ~Model() = default;
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const ModelTag& tag() const noexcept { return tag_; }
  virtual std::string name() const { return tag_.to_string(); }

  /// The extension at an object, epsilon_A : A -> A.
  virtual Morphism epsilon_at(const Space& a) const = 0;
  /// epsilon(f) = epsilon_B o f.
  virtual Morphism epsilon(const Morphism& f) const;
  /// f : A -> B  gives  d[f] : A x A -> B.
  virtual Morphism derivative(const Morphism& f) const = 0;

  /// Throws ModelRestriction when the model has no such object.
  virtual void check_space(const Space& a) const = 0;
  virtual Space default_space() const = 0;

  /// Registration-time check applied to every primitive instance and to
  /// user-supplied subjects (additivity, causality). Returns f tagged with
  /// this model.
  virtual Morphism admit(const Morphism& f) const;

  void register_primitive(const std::string& name, PrimitiveFactory factory);
  /// Instantiates `name` at `space`; UnknownPrimitive when unregistered.
  Morphism primitive(const std::string& name, const Space& space) const;
  bool has_primitive(const std::string& name) const;
  /// Registration order.
  const std::vector<std::string>& primitive_names() const noexcept { return order_; }

private:
  ModelTag tag_;
  std::map<std::string, PrimitiveFactory> factories_;
  std::vector<std::string> order_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::string, std::string>, Morphism> cache_;
};

std::unique_ptr<Model> make_model(const ModelTag& tag);
std::unique_ptr<Model> make_model(std::string_view text);

} // namespace diffcat
