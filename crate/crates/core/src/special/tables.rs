// Generated with arbitrary-precision arithmetic; every entry is correctly rounded.
/// `FACTORIAL[n] = n!` for n in 0..=170.
pub(crate) const FACTORIAL: [f64; 171] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    1.21645100408832e+17,
    2.43290200817664e+18,
    5.109094217170944e+19,
    1.1240007277776077e+21,
    2.585201673888498e+22,
    6.204484017332394e+23,
    1.5511210043330986e+25,
    4.0329146112660565e+26,
    1.0888869450418352e+28,
    3.0488834461171387e+29,
    8.841761993739702e+30,
    2.6525285981219107e+32,
    8.222838654177922e+33,
    2.631308369336935e+35,
    8.683317618811886e+36,
    2.9523279903960416e+38,
    1.0333147966386145e+40,
    3.7199332678990125e+41,
    1.3763753091226346e+43,
    5.230226174666011e+44,
    2.0397882081197444e+46,
    8.159152832478977e+47,
    3.345252661316381e+49,
    1.40500611775288e+51,
    6.041526306337383e+52,
    2.658271574788449e+54,
    1.1962222086548019e+56,
    5.502622159812089e+57,
    2.5862324151116818e+59,
    1.2413915592536073e+61,
    6.082818640342675e+62,
    3.0414093201713376e+64,
    1.5511187532873822e+66,
    8.065817517094388e+67,
    4.2748832840600255e+69,
    2.308436973392414e+71,
    1.2696403353658276e+73,
    7.109985878048635e+74,
    4.0526919504877214e+76,
    2.3505613312828785e+78,
    1.3868311854568984e+80,
    8.32098711274139e+81,
    5.075802138772248e+83,
    3.146997326038794e+85,
    1.98260831540444e+87,
    1.2688693218588417e+89,
    8.247650592082472e+90,
    5.443449390774431e+92,
    3.647111091818868e+94,
    2.4800355424368305e+96,
    1.711224524281413e+98,
    1.1978571669969892e+100,
    8.504785885678623e+101,
    6.1234458376886085e+103,
    4.4701154615126844e+105,
    3.307885441519386e+107,
    2.48091408113954e+109,
    1.8854947016660504e+111,
    1.4518309202828587e+113,
    1.1324281178206297e+115,
    8.946182130782976e+116,
    7.156945704626381e+118,
    5.797126020747368e+120,
    4.753643337012842e+122,
    3.945523969720659e+124,
    3.314240134565353e+126,
    2.81710411438055e+128,
    2.4227095383672734e+130,
    2.107757298379528e+132,
    1.8548264225739844e+134,
    1.650795516090846e+136,
    1.4857159644817615e+138,
    1.352001527678403e+140,
    1.2438414054641308e+142,
    1.1567725070816416e+144,
    1.087366156656743e+146,
    1.032997848823906e+148,
    9.916779348709496e+149,
    9.619275968248212e+151,
    9.426890448883248e+153,
    9.332621544394415e+155,
    9.332621544394415e+157,
    9.42594775983836e+159,
    9.614466715035127e+161,
    9.90290071648618e+163,
    1.0299016745145628e+166,
    1.081396758240291e+168,
    1.1462805637347084e+170,
    1.226520203196138e+172,
    1.324641819451829e+174,
    1.4438595832024937e+176,
    1.588245541522743e+178,
    1.7629525510902446e+180,
    1.974506857221074e+182,
    2.2311927486598138e+184,
    2.5435597334721877e+186,
    2.925093693493016e+188,
    3.393108684451898e+190,
    3.969937160808721e+192,
    4.684525849754291e+194,
    5.574585761207606e+196,
    6.689502913449127e+198,
    8.094298525273444e+200,
    9.875044200833601e+202,
    1.214630436702533e+205,
    1.506141741511141e+207,
    1.882677176888926e+209,
    2.372173242880047e+211,
    3.0126600184576594e+213,
    3.856204823625804e+215,
    4.974504222477287e+217,
    6.466855489220474e+219,
    8.47158069087882e+221,
    1.1182486511960043e+224,
    1.4872707060906857e+226,
    1.9929427461615188e+228,
    2.6904727073180504e+230,
    3.659042881952549e+232,
    5.012888748274992e+234,
    6.917786472619489e+236,
    9.615723196941089e+238,
    1.3462012475717526e+241,
    1.898143759076171e+243,
    2.695364137888163e+245,
    3.854370717180073e+247,
    5.5502938327393044e+249,
    8.047926057471992e+251,
    1.1749972043909107e+254,
    1.727245890454639e+256,
    2.5563239178728654e+258,
    3.80892263763057e+260,
    5.713383956445855e+262,
    8.62720977423324e+264,
    1.3113358856834524e+267,
    2.0063439050956823e+269,
    3.0897696138473508e+271,
    4.789142901463394e+273,
    7.471062926282894e+275,
    1.1729568794264145e+278,
    1.853271869493735e+280,
    2.9467022724950384e+282,
    4.7147236359920616e+284,
    7.590705053947219e+286,
    1.2296942187394494e+289,
    2.0044015765453026e+291,
    3.287218585534296e+293,
    5.423910666131589e+295,
    9.003691705778438e+297,
    1.503616514864999e+300,
    2.5260757449731984e+302,
    4.269068009004705e+304,
    7.257415615307999e+306,
];

/// `HALF_GAMMA[n] = Γ(n + 1/2)` for n in 0..=171.
pub(crate) const HALF_GAMMA: [f64; 172] = [
    1.772453850905516,
    0.886226925452758,
    1.329340388179137,
    3.3233509704478426,
    11.631728396567448,
    52.34277778455352,
    287.88527781504433,
    1871.2543057977884,
    14034.407293483413,
    119292.46199460901,
    1133278.3889487856,
    11899423.083962249,
    136843365.46556586,
    1710542068.3195732,
    23092317922.31424,
    334838609873.55646,
    5189998453040.125,
    85634974475162.06,
    1498612053315336.0,
    2.772432298633372e+16,
    5.406242982335075e+17,
    1.1082798113786905e+19,
    2.3828015944641842e+20,
    5.361303587544414e+21,
    1.2599063430729375e+23,
    3.0867705405286966e+24,
    7.871264878348178e+25,
    2.0858851927622668e+27,
    5.736184280096234e+28,
    1.6348125198274267e+30,
    4.822696933490909e+31,
    1.4709225647147272e+33,
    4.6334060788513905e+34,
    1.505856975626702e+36,
    5.044620868349451e+37,
    1.7403941995805607e+39,
    6.17839940851099e+40,
    2.2551157841065116e+42,
    8.456684190399419e+43,
    3.255823413303776e+45,
    1.2860502482549915e+47,
    5.208503505432716e+48,
    2.161528954754577e+50,
    9.186498057706952e+51,
    3.996126655102524e+53,
    1.7782763615206234e+55,
    8.091157444918836e+56,
    3.762388211887259e+58,
    1.787134400646448e+60,
    8.667601843135272e+61,
    4.29046291235196e+63,
    2.1666837707377396e+65,
    1.115842141929936e+67,
    5.858171245132164e+68,
    3.134121616145708e+70,
    1.7080962807994106e+72,
    9.479934358436729e+73,
    5.356162912516752e+75,
    3.0797936746971323e+77,
    1.8016792996978223e+79,
    1.0719991833202043e+81,
    6.485595059087236e+82,
    3.98864096133865e+84,
    2.4929006008366564e+86,
    1.5829918815312768e+88,
    1.0210297635876735e+90,
    6.687744951499262e+91,
    4.447350392747009e+93,
    3.0019615151042313e+95,
    2.0563436378463983e+97,
    1.4291588283032468e+99,
    1.007556973953789e+101,
    7.204032363769592e+102,
    5.222923463732954e+104,
    3.838848745843721e+106,
    2.859942315653572e+108,
    2.159256448318447e+110,
    1.651831182963612e+112,
    1.2801691667967993e+114,
    1.0049327959354875e+116,
    7.989215727687125e+117,
    6.4313186607881355e+119,
    5.241524708542331e+121,
    4.3242578845474225e+123,
    3.610755333597098e+125,
    3.051088256889548e+127,
    2.6086804596405634e+129,
    2.2565085975890872e+131,
    1.9744450228904514e+133,
    1.7473838452580496e+135,
    1.5639085415059543e+137,
    1.4153372300628886e+139,
    1.2950335655075431e+141,
    1.1979060480944773e+143,
    1.1200421549683363e+145,
    1.0584398364450779e+147,
    1.0108100438050493e+149,
    9.754316922718727e+150,
    9.510458999650758e+152,
    9.367802114655996e+154,
    9.320963104082716e+156,
    9.36756791960313e+158,
    9.508081438397177e+160,
    9.745783474357106e+162,
    1.0086885895959605e+165,
    1.0540795761277788e+167,
    1.1120539528148066e+169,
    1.184337459747769e+171,
    1.2731627692288517e+173,
    1.381381604613304e+175,
    1.512612857051568e+177,
    1.6714372070419825e+179,
    1.8636524858518108e+181,
    2.096609046583287e+183,
    2.3796512678720307e+185,
    2.724700701713475e+187,
    3.1470293104790637e+189,
    3.666289146708109e+191,
    4.307889747382029e+193,
    5.104849350647704e+195,
    6.100294974024006e+197,
    7.350855443698927e+199,
    8.931289364094196e+201,
    1.0940829471015391e+204,
    1.3511924396704008e+206,
    1.682234587389649e+208,
    2.1112044071740094e+210,
    2.670673575075122e+212,
    3.4051088082207805e+214,
    4.3755648185637027e+216,
    5.666356440039995e+218,
    7.394595154252193e+220,
    9.723892627841635e+222,
    1.2884157731890166e+225,
    1.7200350572073372e+227,
    2.3134471519438686e+229,
    3.134720890883942e+231,
    4.278894016056581e+233,
    5.883479272077798e+235,
    8.14861879182775e+237,
    1.1367323214599712e+240,
    1.5971089116512594e+242,
    2.2599091099865324e+244,
    3.2203704817308086e+246,
    4.62123164128371e+248,
    6.677679721654961e+250,
    9.716023995007969e+252,
    1.4233975152686673e+255,
    2.0995113350212844e+257,
    3.117774332506607e+259,
    4.661072627097378e+261,
    7.014914303781554e+263,
    1.0627595170229054e+266,
    1.6207082634599307e+268,
    2.4877871844109936e+270,
    3.843631199914985e+272,
    5.976846515867802e+274,
    9.35376479733311e+276,
    1.4732179555799648e+279,
    2.3350504595942442e+281,
    3.72440548305282e+283,
    5.977670800299776e+285,
    9.653938342484138e+287,
    1.5687649806536723e+290,
    2.5649307433687544e+292,
    4.2193110728416007e+294,
    6.982959825552849e+296,
    1.1626628109545494e+299,
    1.9474602083488703e+301,
    3.281470451067846e+303,
    5.56209241456e+305,
    9.4833675668248e+307,
];
