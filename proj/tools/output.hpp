#pragma once

#include <sstream>
#include <string>

namespace sppcli {

/// 17 significant digits in scientific form; identical input gives identical text.
std::string num(double v);

/// Collects a document in memory. commit() writes it to stdout (empty path)
/// or to a temporary sibling that is renamed over the target, so readers never
/// see a partial file and failed runs leave no file behind.
class Document {
 public:
  std::ostringstream& body() { return text_; }
  void comment(const std::string& line) { text_ << "# " << line << '\n'; }
  void commit(const std::string& path) const;

 private:
  std::ostringstream text_;
};

}  // namespace sppcli
