#include "abc/expressions.hpp"

namespace abc::expr {

bool mod7_replacement(long long nv, Mod7Rep& rep) {
    rep = Mod7Rep{};
    switch (nv % 7) {
        case 0:
            rep.b3_copies = static_cast<int>(nv / 7);
            return rep.b3_copies >= 1;
        case 1:
            rep.b3_copies = static_cast<int>((nv - 1) / 7 - 1);
            rep.extra_count = 1;
            rep.extras[0] = kRepB3s;
            return rep.b3_copies >= 0;
        case 2:
            rep.b3_copies = static_cast<int>((nv - 2) / 7 - 1);
            rep.extra_count = 1;
            rep.extras[0] = kRepB4;
            return rep.b3_copies >= 0;
        case 3:
            rep.b3_copies = static_cast<int>((nv - 3) / 7 - 1);
            rep.extra_count = 1;
            rep.extras[0] = kRepB3ss;
            return rep.b3_copies >= 0;
        case 4:
            rep.b3_copies = static_cast<int>((nv - 4) / 7 - 2);
            rep.extra_count = 2;
            rep.extras[0] = kRepB4;
            rep.extras[1] = kRepB4;
            return rep.b3_copies >= 0;
        case 5:
            rep.b3_copies = static_cast<int>((nv - 5) / 7);
            rep.extra_count = 1;
            rep.extras[0] = kRepB2;
            return rep.b3_copies >= 0;
        case 6:
            rep.b3_copies = static_cast<int>((nv - 6) / 7);
            rep.extra_count = 1;
            rep.extras[0] = kRepB2s;
            return rep.b3_copies >= 0;
        default: return false;
    }
}

}  // namespace abc::expr
