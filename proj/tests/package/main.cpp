#include <iostream>

#include <symflag/catalog.hpp>

int main() {
  const auto& entries = symflag::builtin_catalog();
  symflag::EntryModel m(symflag::find_entry(entries, "group-A2"));
  std::cout << entries.size() << " " << m.weyl().size() << "\n";
  return m.weyl().size() == 6 ? 0 : 1;
}
