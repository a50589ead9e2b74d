// Embedded ray-class tables for the three quadratic fields. One row per
// ray class (K1, K2) or per class pair sharing a congruence condition (K3).
// Labels name a generating ideal, with v standing for sqrt(-6), i, or
// sqrt(6) depending on the field; they are comments, the computation is
// driven by (coset, i, j) and the form selector.

#include "threefield/fields.hpp"

namespace threefield {

namespace {

constexpr FieldId K1 = FieldId::K1;
constexpr FieldId K2 = FieldId::K2;
constexpr FieldId K3 = FieldId::K3;
constexpr Coset I = Coset::I;
constexpr Coset J = Coset::J;
constexpr Coset B = Coset::B;
constexpr Coset Bp = Coset::Bp;

FieldData make_k1() {
    FieldData f;
    f.field_id = K1;
    f.discriminant = -24;
    f.conductor_norm = 96;
    f.conductor_has_infinite_part = false;
    f.unit_count = 2;
    f.has_nontorsion_unit = false;
    f.rows = {
        {K1, "[O]", {0, 1}, {1, 24}, 24, 0, 1, 1, I, true},
        {K1, "[(43+14v)]", {1, 2}, {5, 24}, 24, 12, 5, 1, I, true},
        {K1, "[(1-2v)]", {1, 2}, {1, 24}, 24, 12, 1, 1, I, true},
        {K1, "[(211-72v)]", {0, 1}, {19, 24}, 24, 0, 19, 1, I, true},
        {K1, "[(5, 2+v)]", {1, 8}, {11, 12}, 24, 3, 22, 5, I, false},
        {K1, "[(15125, 14912+v)]", {1, 8}, {1, 12}, 24, 3, 2, 5, I, false},
        {K1, "[(125, 37+v)]", {3, 8}, {7, 12}, 24, 9, 14, 5, I, false},
        {K1, "[(378125, 45162+v)]", {3, 8}, {5, 12}, 24, 9, 10, 5, I, false},

        {K1, "[(13)]", {0, 1}, {11, 24}, 24, 0, 11, 1, J, true},
        {K1, "[(559+182v)]", {1, 2}, {7, 24}, 24, 12, 7, 1, J, true},
        {K1, "[(13-26v)]", {1, 2}, {13, 24}, 24, 12, 13, 1, J, true},
        {K1, "[(2743-936v)]", {0, 1}, {7, 24}, 24, 0, 7, 1, J, true},
        {K1, "[(65, 26+13v)]", {5, 8}, {11, 12}, 24, 15, 22, 5, J, false},
        {K1, "[(196625, 193856+13v)]", {5, 8}, {1, 12}, 24, 15, 2, 5, J, false},
        {K1, "[(1625, 481+13v)]", {7, 8}, {7, 12}, 24, 21, 14, 5, J, false},
        {K1, "[(4915625, 587106+13v)]", {7, 8}, {5, 12}, 24, 21, 10, 5, J, false},

        {K1, "[(91+13v)]", {3, 4}, {19, 24}, 24, 18, 19, 7, B, true},
        {K1, "[(2821+1833v)]", {3, 4}, {13, 24}, 24, 18, 13, 7, B, true},
        {K1, "[(247-169v)]", {1, 4}, {7, 24}, 24, 6, 7, 7, B, true},
        {K1, "[(24817-3809v)]", {1, 4}, {1, 24}, 24, 6, 1, 7, B, true},
        {K1, "[(3575, 806+13v)]", {3, 8}, {1, 3}, 24, 9, 8, 11, B, false},
        {K1, "[(10814375, 8452106+13v)]", {1, 8}, {5, 6}, 24, 3, 20, 11, B, false},
        // x1 printed as 3/4; i = 9 and the B/B' pairing require 3/8.
        {K1, "[(89375, 50856+13v)]", {3, 8}, {5, 6}, 24, 9, 20, 11, B, false},
        {K1, "[(270359375, 192296481+13v)]", {1, 8}, {1, 3}, 24, 3, 8, 11, B, false},

        {K1, "[(7+v)]", {3, 4}, {7, 24}, 24, 18, 7, 7, Bp, true},
        {K1, "[(217+141v)]", {3, 4}, {1, 24}, 24, 18, 1, 7, Bp, true},
        {K1, "[(19-13v)]", {1, 4}, {19, 24}, 24, 6, 19, 7, Bp, true},
        {K1, "[(1909-293v)]", {1, 4}, {13, 24}, 24, 6, 13, 7, Bp, true},
        {K1, "[(275, 62+v)]", {7, 8}, {1, 3}, 24, 21, 8, 11, Bp, false},
        {K1, "[(831875, 650162+v)]", {5, 8}, {5, 6}, 24, 15, 20, 11, Bp, false},
        {K1, "[(6875, 3912+v)]", {7, 8}, {5, 6}, 24, 21, 20, 11, Bp, false},
        {K1, "[(20796875, 14792037+v)]", {5, 8}, {1, 3}, 24, 15, 8, 11, Bp, false},
    };
    return f;
}

FieldData make_k2() {
    FieldData f;
    f.field_id = K2;
    f.discriminant = -4;
    f.conductor_norm = 576;
    f.conductor_has_infinite_part = false;
    f.unit_count = 4;
    f.has_nontorsion_unit = false;
    f.rows = {
        {K2, "[O]", {1, 24}, {0, 1}, 24, 1, 0, 1, I, true},
        {K2, "[(13)]", {13, 24}, {0, 1}, 24, 13, 0, 1, I, true},
        {K2, "[(3956+267i)]", {1, 6}, {7, 8}, 24, 4, 21, 1, I, true},
        {K2, "[(51428+3471i)]", {1, 6}, {3, 8}, 24, 4, 9, 1, I, true},
        {K2, "[(3713+2016i)]", {7, 24}, {0, 1}, 24, 7, 0, 1, I, true},
        {K2, "[(48269+26208i)]", {19, 24}, {0, 1}, 24, 19, 0, 1, I, true},
        {K2, "[(14150356+8966667i)]", {4, 6}, {1, 8}, 24, 16, 3, 1, I, true},
        {K2, "[(183954628+116566671i)]", {1, 6}, {5, 8}, 24, 4, 15, 1, I, true},
        {K2, "[(2287-3086i)]", {7, 24}, {5, 12}, 24, 7, 10, 5, I, true},
        {K2, "[(29731-40118i)]", {19, 24}, {5, 12}, 24, 19, 10, 5, I, true},
        {K2, "[(3586-1973i)]", {5, 12}, {19, 24}, 24, 10, 19, 5, I, true},
        {K2, "[(46618-25649i)]", {5, 12}, {7, 24}, 24, 10, 7, 5, I, true},
        {K2, "[(14713007-6847726i)]", {23, 24}, {1, 12}, 24, 23, 2, 5, I, true},
        {K2, "[(191269091-89020438i)]", {11, 24}, {1, 12}, 24, 11, 2, 5, I, true},
        {K2, "[(17292386-96373i)]", {11, 12}, {13, 24}, 24, 22, 13, 5, I, true},
        {K2, "[(224801018-1252849i)]", {11, 12}, {1, 24}, 24, 22, 1, 5, I, true},

        {K2, "[(60-11i)]", {1, 2}, {11, 24}, 24, 12, 11, 1, J, true},
        {K2, "[(780-143i)]", {1, 2}, {23, 24}, 24, 12, 23, 1, J, true},
        {K2, "[(63+16i)]", {3, 8}, {1, 3}, 24, 9, 8, 1, J, true},
        {K2, "[(819+208i)]", {7, 8}, {1, 3}, 24, 21, 8, 1, J, true},
        {K2, "[(244956+80117i)]", {1, 2}, {5, 24}, 24, 12, 5, 1, J, true},
        {K2, "[(3184428+1041521i)]", {1, 2}, {7, 24}, 24, 12, 7, 1, J, true},
        {K2, "[(20166+186416i)]", {5, 8}, {1, 3}, 24, 15, 8, 1, J, true},
        {K2, "[(2621619+2423408i)]", {1, 8}, {1, 3}, 24, 3, 8, 1, J, true},
        {K2, "[(46-43i)]", {1, 12}, {19, 24}, 24, 2, 19, 5, J, true},
        {K2, "[(598-599i)]", {1, 12}, {7, 24}, 24, 2, 7, 5, J, true},
        {K2, "[(193457-157826i)]", {17, 24}, {11, 12}, 24, 17, 22, 5, J, true},
        {K2, "[(2514941-2051738i)]", {5, 24}, {11, 12}, 24, 5, 22, 5, J, true},
        // Same labels as two I-coset rows; the congruence data differs and
        // is what defines the row.
        {K2, "[(17292386-96373i)]", {7, 12}, {13, 24}, 24, 14, 13, 5, J, true},
        {K2, "[(224801018-1252849i)]", {7, 12}, {1, 24}, 24, 14, 1, 5, J, true},
        {K2, "[(1036483057-195998626i)]", {23, 24}, {5, 12}, 24, 23, 10, 5, J, true},
        {K2, "[(13474279741-2547982138i)]", {11, 24}, {5, 12}, 24, 11, 10, 5, J, true},
    };
    return f;
}

FieldData make_k3() {
    FieldData f;
    f.field_id = K3;
    f.discriminant = 24;
    f.conductor_norm = 96;
    f.conductor_has_infinite_part = true;
    f.unit_count = 2;
    f.has_nontorsion_unit = true;
    f.rows = {
        {K3, "[O]", {1, 8}, {1, 12}, 24, 3, 2, 1, I, true},
        // y1 printed as 5/12; j = 14 and the grouped congruence sets require 7/12.
        {K3, "[(4927-416v)]", {7, 8}, {7, 12}, 24, 21, 14, 1, I, true},
        {K3, "[(631+50v)]", {3, 8}, {11, 12}, 24, 9, 22, 1, I, true},
        {K3, "[(2984137-16146v)]", {3, 8}, {7, 12}, 24, 9, 14, 1, I, true},
        {K3, "[(73+201v)]", {3, 4}, {23, 24}, 24, 18, 23, 5, I, false},
        {K3, "[(1001-2535v)]", {3, 4}, {7, 24}, 24, 18, 7, 5, I, false},
        {K3, "[(106363+130481v)]", {3, 4}, {5, 24}, 24, 18, 5, 5, I, false},
        {K3, "[(128869+1549535v)]", {1, 4}, {11, 24}, 24, 6, 11, 5, I, false},

        {K3, "[(13)]", {5, 8}, {1, 12}, 24, 15, 2, 1, J, true},
        {K3, "[(379-32v)]", {3, 8}, {7, 12}, 24, 9, 14, 1, J, true},
        {K3, "[(18203+650v)]", {1, 8}, {7, 12}, 24, 3, 14, 1, J, true},
        {K3, "[(229549-1242v)]", {7, 8}, {7, 12}, 24, 21, 14, 1, J, true},
        {K3, "[(77-195v)]", {3, 4}, {19, 24}, 24, 18, 19, 5, J, false},
        {K3, "[(949+2613v)]", {3, 4}, {11, 24}, 24, 18, 11, 5, J, false},
        {K3, "[(9913+119195v)]", {1, 4}, {23, 24}, 24, 6, 23, 5, J, false},
        {K3, "[(1382719+1696253v)]", {3, 4}, {17, 24}, 24, 18, 17, 5, J, false},
    };
    return f;
}

}  // namespace

const FieldData& field_k1() {
    static const FieldData f = make_k1();
    return f;
}

const FieldData& field_k2() {
    static const FieldData f = make_k2();
    return f;
}

const FieldData& field_k3() {
    static const FieldData f = make_k3();
    return f;
}

}  // namespace threefield
