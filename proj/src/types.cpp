#include "rindler/types.hpp"

#include <algorithm>

namespace rindler {

char party_letter(Party p) {
  switch (p) {
    case Party::A: return 'A';
    case Party::B: return 'B';
    case Party::C: return 'C';
    case Party::D: return 'D';
  }
  throw Error("invalid party");
}

Party party_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Party::A;
    case 'B': case 'b': return Party::B;
    case 'C': case 'c': return Party::C;
    case 'D': case 'd': return Party::D;
    default: throw Error(std::string("unknown party letter '") + c + "'");
  }
}

std::string slot_label(const ModeSlot& slot) {
  std::string out(1, party_letter(slot.party));
  if (slot.region == Region::RindlerI) out += "I";
  if (slot.region == Region::RindlerII) out += "II";
  return out;
}

namespace {

// Lexicographic key implementing the canonical order.
int slot_key(const ModeSlot& s) {
  return static_cast<int>(s.party) * 3 + static_cast<int>(s.region);
}

}  // namespace

ModeRegister::ModeRegister(std::vector<ModeSlot> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw Error("mode register must hold at least one slot");
  for (size_t i = 1; i < slots_.size(); ++i) {
    if (slot_key(slots_[i - 1]) >= slot_key(slots_[i])) {
      throw Error("mode register slots out of canonical order or duplicated");
    }
  }
}

ModeRegister ModeRegister::minkowski(int parties) {
  if (parties < 1 || parties > kPartyCount) {
    throw Error("party count must be between 1 and 4");
  }
  std::vector<ModeSlot> slots;
  slots.reserve(static_cast<size_t>(parties));
  for (int i = 0; i < parties; ++i) {
    slots.push_back({static_cast<Party>(i), Region::Minkowski});
  }
  return ModeRegister(std::move(slots));
}

int ModeRegister::find(Party p, Region r) const {
  for (int i = 0; i < size(); ++i) {
    if (slots_[static_cast<size_t>(i)] == ModeSlot{p, r}) return i;
  }
  return -1;
}

std::vector<int> ModeRegister::slots_of(Party p) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (slots_[static_cast<size_t>(i)].party == p) out.push_back(i);
  }
  return out;
}

ModeRegister ModeRegister::subset(const std::vector<int>& keep) const {
  std::vector<ModeSlot> slots;
  slots.reserve(keep.size());
  for (int i : keep) slots.push_back(slot(i));
  return ModeRegister(std::move(slots));
}

std::string ModeRegister::label() const {
  std::string out;
  for (const auto& s : slots_) out += slot_label(s);
  return out;
}

}  // namespace rindler
