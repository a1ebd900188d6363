// Copyright 2026 The fallacyforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fallacy/kb/seeds.hpp"

#include <string>

#include "fallacy/error.hpp"

namespace fallacy::kb {

using rules::FallacyCode;

std::string_view seed_text(FallacyCode code) {
  switch (code) {
    case FallacyCode::ID:
      return R"(he(brush_teeth, 2_mins, teeth_health_for_that_day).  % two minutes of brushing keeps teeth healthy for a day
he(brush_teeth, 14_mins, teeth_health_for_one_week).  % fourteen minutes of brushing is claimed to cover a week
vc(2_mins, repeat_7_times_in_one_go, 14_mins).  % seven sessions back to back add up to fourteen minutes
)";
    case FallacyCode::FA:
      return R"(hp(kid, kid_word).  % the word kid is spelled with the letters k-i-d
hp(kidney, kid_word).  % kidney also begins with k-i-d
hp(kid, grow_into_adult).  % a kid grows into an adult
)";
    case FallacyCode::FP:
      return R"(ef(people_has_two_lungs, two_lungs_breathe_out_carbon_dioxide).  % people normally have two lungs that exhale carbon dioxide
fp(two_lungs_breathe_out_carbon_dioxide, lung_number_influence_carbon_number).  % assumes lung count sets the carbon atom count
po(people_can_have_one_lung, lung_number_influence_carbon_number).  % someone living with one lung
fplc(lung_number_influence_carbon_number, people_can_have_one_lung, one_lung_breathe_out_carbon_monoxide).  % so one lung would exhale carbon monoxide
)";
    case FallacyCode::AF:
      return R"(hr(shampoo_bottle, lather_rinse_repeat).  % the shampoo bottle carries the instruction
rri(lather_rinse_repeat, wash_once_or_twice).  % sensible reading: wash once or twice
rui(lather_rinse_repeat, infinite_washing).  % literal reading: repeat forever
)";
    case FallacyCode::FC:
      return R"(hp(chimney, survives_fire).  % a brick chimney is left standing after a fire
ipo(chimney, building).  % the chimney is one part of the building
lp(building, survives_fire).  % so the whole building should survive fire
)";
    case FallacyCode::BQ:
      return R"(ca(bible_true, bible_word_of_god).  % the claim that the bible is true rests on it being god's word
ema(bible_word_of_god, bible_says_god_exists).  % that in turn rests on the bible saying god exists
emrc(bible_says_god_exists, bible_true).  % which is only credible if the bible is true
)";
    case FallacyCode::CT:
      return R"(qc(time_is_money, time_is_valuable_as_money).  % the saying means time is as valuable as money
qoc(time_is_money, time_is_literally_money).  % quoted without context it reads as an identity
froc(time_is_literally_money, third_world_countries_have_less_money).  % poorer countries have less money
ifqoc(third_world_countries_have_less_money, time_is_slower_in_third_world_countries).  % so time would pass more slowly there
)";
    case FallacyCode::IE:
      return R"(cc(cycling_forwards, cycling_backwards).  % pedaling backwards is the opposite of pedaling forwards
cc(reduce_weight, gain_weight).  % gaining weight is the opposite of losing it
im(cycling_forwards, reduce_weight).  % cycling forwards leads to weight loss
)";
    case FallacyCode::IT:
      return R"(im(rainy_days, wet_ground).  % rain makes the ground wet
im(sprinklers_on, wet_ground).  % running sprinklers also make it wet
)";
    case FallacyCode::WD:
      return R"(cs(move_eye_close_to_mirror, mirror_looks_like_eye).  % leaning in makes the reflection fill the mirror with an eye
)";
    case FallacyCode::FS:
      return R"(ha(room_event, lightbulb_switch).  % someone flips the light switch
ha(room_event, darkness_emission).  % the room goes dark
rc(absence_of_light, darkness_emission).  % darkness is really the absence of light
)";
    case FallacyCode::EC:
    case FallacyCode::NF:
    case FallacyCode::FD:
      break;
  }
  throw UnknownSchemaError("no rule schema for " +
                           std::string(rules::code_name(code)));
}

KnowledgeBase load_seed(FallacyCode code) {
  KnowledgeBase kb = KnowledgeBase::parse(seed_text(code));
  kb.seal();
  return kb;
}

}  // namespace fallacy::kb
