#include "diffcat/model.hpp"

#include "diffcat/models/findiff.hpp"
#include "diffcat/models/module_maps.hpp"
#include "diffcat/models/smooth.hpp"
#include "diffcat/models/streams.hpp"

namespace diffcat {

std::unique_ptr<Model> make_model(const ModelTag& tag) {
  switch (tag.kind) {
  case ModelTag::Kind::FinDiff:
    return std::make_unique<FinDiffModel>();
  case ModelTag::Kind::Smooth:
    return std::make_unique<SmoothModel>();
  case ModelTag::Kind::ModuleMaps:
    return std::make_unique<ModuleModel>(tag.r);
  case ModelTag::Kind::Streams:
    return std::make_unique<StreamsModel>(tag.k);
  }
  return nullptr;
}

std::unique_ptr<Model> make_model(std::string_view text) { return make_model(ModelTag::parse(text)); }

} // namespace diffcat
