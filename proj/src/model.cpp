#include "diffcat/model.hpp"

#include "diffcat/errors.hpp"

namespace diffcat {

Morphism Model::epsilon(const Morphism& f) const {
  return compose(epsilon_at(f.cod()), f).renamed("eps(" + f.name() + ")");
}

Morphism Model::admit(const Morphism& f) const {
  check_space(f.dom());
  check_space(f.cod());
  return f.with_model(tag_);
}

void Model::register_primitive(const std::string& name, PrimitiveFactory factory) {
  if (!factories_.contains(name))
    order_.push_back(name);
  factories_[name] = std::move(factory);
  std::lock_guard lock(cache_mutex_);
  std::erase_if(cache_, [&](const auto& entry) { return entry.first.first == name; });
}

bool Model::has_primitive(const std::string& name) const { return factories_.contains(name); }

Morphism Model::primitive(const std::string& name, const Space& space) const {
  const auto it = factories_.find(name);
  if (it == factories_.end())
    throw UnknownPrimitive("model " + this->name() + " has no primitive '" + name + "'");
  const auto key = std::make_pair(name, space.to_string());
  {
    std::lock_guard lock(cache_mutex_);
    if (const auto hit = cache_.find(key); hit != cache_.end())
      return hit->second;
  }
  Morphism made = admit(it->second(space).renamed(name));
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(key, made);
  return made;
}

} // namespace diffcat
