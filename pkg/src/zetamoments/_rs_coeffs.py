# Generated by tools/gen_rs_coeffs.py; do not edit.
# RS_COEFFS[j][i] is the coefficient of z**i in C_j, z = p - 1/2.

RS_COEFFS = (
    (
        0.3826834323650898,
        0.0,
        1.7489618723100817,
        0.0,
        2.118025207685496,
        0.0,
        -0.8707216670511481,
        2.1952194889091757e-61,
        -3.4733112243465167,
        1.2883196053546984e-61,
        -1.6626947308999325,
        -1.1091412207025479e-61,
        1.216731288919232,
        -1.356394398108729e-61,
        1.3014304161007977,
        -3.560072905777996e-63,
        0.03051102182736167,
        4.827408966250152e-62,
        -0.3755803051545095,
        1.5176525321587868e-62,
        -0.1085784416564066,
        -7.796176215563256e-63,
        0.051832902999549624,
        -4.813030051127489e-63,
        0.029999480619902277,
        3.865836378914621e-64,
        -0.0022759396706125644,
        7.830414900656528e-64,
        -0.004382647416580339,
        7.5949396550530115e-65,
        -0.0004064230183729847,
        -7.790627413527344e-65,
        0.0004006097785422114,
        -1.8072910894800324e-65,
        8.971057991388841e-05,
        4.785627772514642e-66,
        -2.3025650027239108e-05,
        2.0036847092892263e-66,
        -9.380006601906792e-06,
        -1.383445199839035e-67,
        6.323514947609108e-07,
        -1.4630776167444109e-67,
        6.551022819231502e-07,
    ),
    (
        0.0,
        -0.053650205256750697,
        0.0,
        0.11027818741081483,
        -4.865486433740744e-62,
        1.2317200154315227,
        -6.853038534518795e-62,
        1.2634964862799458,
        1.1589136072396734e-61,
        -1.695108997559503,
        2.4565878105020526e-61,
        -2.9998711967650102,
        1.0257713393951984e-62,
        -0.10819944959899208,
        -2.0787548591409232e-61,
        1.9407662946212714,
        -9.312716877357479e-62,
        0.7838423561500687,
        6.566191729499982e-62,
        -0.5054829667900366,
        5.397807674291104e-62,
        -0.38450723496057976,
        -5.630559816639051e-63,
        0.03747264646531532,
        -1.450410437796544e-62,
        0.09092026610973176,
        -1.7574101992692702e-63,
        0.01044923755006451,
        2.2175958630583638e-63,
        -0.012582979651583417,
        6.244285347897717e-64,
        -0.003399503721151274,
        -1.983484627284755e-64,
        0.0010410950537714891,
        -9.858950241624488e-65,
        0.0005010949051118486,
        8.006466854900888e-66,
        -3.956359669003182e-05,
        9.876540361114906e-66,
        -4.7624592453571896e-05,
        3.926434178851973e-67,
        -1.8539355338085133e-06,
        -6.885196177972603e-67,
        3.1936918080068973e-06,
    ),
    (
        0.005188542830293168,
        6.162210555779363e-64,
        0.0012378633552253898,
        4.339737349149976e-63,
        -0.18137505725166997,
        -5.952477923106402e-63,
        0.14291492748532125,
        -7.865406168155876e-62,
        1.3303391766687565,
        -2.6460576967284043e-62,
        0.3522472353403734,
        2.060834897809378e-61,
        -2.421001595891951,
        1.6394212964978443e-61,
        -1.6760787022538108,
        -1.4886250251273488e-61,
        1.3689416723328371,
        -1.866203904358795e-61,
        1.5539019430222982,
        2.227123558638876e-62,
        -0.1722164273472998,
        8.909491681019465e-62,
        -0.6359068055045431,
        1.4834819547549467e-62,
        -0.09911649873041208,
        -2.2132334920367457e-62,
        0.14033480067387008,
        -7.929473077368673e-63,
        0.04782352019827292,
        3.0003164233834026e-63,
        -0.017356040641479782,
        1.83776706592937e-63,
        -0.010225012534028593,
        -1.7198867164495563e-64,
        0.0009274149159794888,
        -2.5958500063123647e-64,
        0.0013572194372373386,
        -1.2607617337651112e-65,
        6.41369012029388e-05,
        2.464711518376664e-65,
        -0.0001230080569819663,
        3.7386393182489026e-66,
        -1.83135074047892e-05,
        -1.6194303889113083e-66,
        7.821628604322627e-06,
    ),
    (
        -9.16056926901535e-66,
        -0.0026794321814389136,
        -1.0451716496034905e-63,
        0.02995372109103515,
        1.688213934450319e-63,
        -0.042570172541828696,
        1.5273363403693796e-62,
        -0.28997965779803886,
        -2.9276683753880054e-62,
        0.4888831999235446,
        -9.432599089328101e-62,
        1.230855876395746,
        6.989737194036062e-62,
        -0.8297560708527408,
        2.231365225416764e-61,
        -2.249763536666567,
        -6.561396406307301e-63,
        0.07845139961005472,
        -2.094528799119693e-61,
        1.7467492800868893,
        -6.041471535508646e-62,
        0.45968080979749937,
        9.157206515591149e-62,
        -0.6619353471039775,
        4.66526202821697e-62,
        -0.31590441036173633,
        -1.9813221210374806e-62,
        0.12844792545207495,
        -1.6351391356739572e-62,
        0.10073382716626152,
        1.590020505301076e-63,
        -0.009530183848825268,
        3.365435006009118e-63,
        -0.019264421687514088,
        2.2674689811186982e-64,
        -0.001246463715876929,
        -4.4774146193103085e-64,
        0.0024243969641103086,
        -8.288906824050725e-65,
        0.000437647697741857,
        3.981825449438594e-65,
        -0.00020714032687001792,
        1.2270227889446104e-65,
        -6.274344504186516e-05,
        -2.2835133260150897e-66,
        1.157534381459567e-05,
    ),
    (
        0.00046483389361763383,
        4.702084676479706e-65,
        -0.004022642946136188,
        -7.994799101931254e-66,
        0.003847177051796127,
        -3.1639549989635954e-63,
        0.06581175135809486,
        1.0348280139645376e-62,
        -0.19604124343694448,
        1.6667399355955086e-62,
        -0.20854053686358853,
        -7.2456697661855226e-62,
        0.9507754185141751,
        -5.25198310201874e-62,
        0.5341535312914873,
        1.637331465687044e-61,
        -1.67634944117634,
        1.2146476159796163e-61,
        -1.076747157875129,
        -1.4440885395733311e-61,
        1.235339301656597,
        -1.3238645139519665e-61,
        1.0257825340057276,
        5.3440977626857224e-62,
        -0.40124095793988546,
        7.264084152943261e-62,
        -0.5036663995108304,
        -5.055538342930156e-63,
        0.03573487795502745,
        -2.270972765032456e-62,
        0.14431763086785418,
        -2.526581893515252e-63,
        0.01509152741790347,
        4.3891723983568903e-63,
        -0.026098874779194363,
        1.0687043863252214e-63,
        -0.006126628379519262,
        -5.4328142958222965e-64,
        0.003077503129870841,
        -2.09475314719039e-64,
        0.0011562478934088753,
        4.1506242380266805e-65,
        -0.00022775966758472127,
        2.6368473812592887e-65,
        -0.00014189637118181445,
        -1.3727554539376115e-66,
        7.4648603079559195e-06,
    ),
    (
        -8.66059148923272e-66,
        0.00022686811845737363,
        7.826185669492668e-66,
        0.0011081246853718388,
        6.52372062980156e-64,
        -0.016218579255550092,
        -2.4474398389965604e-63,
        0.052765034053987414,
        -2.946523023293017e-63,
        0.02570880200903324,
        2.74930294001784e-62,
        -0.38058660440806397,
        -1.2218680992263965e-62,
        0.22531987892642316,
        -9.524552254379116e-62,
        1.0344573316495222,
        4.620142784268324e-62,
        -0.5528257697050813,
        1.6681393322194828e-61,
        -1.5287712641078073,
        -3.20370893885295e-62,
        0.32828366427719585,
        -1.5336856591357188e-61,
        1.229110218540087,
        -8.102100340522559e-63,
        0.040936939383115295,
        7.743871883298571e-62,
        -0.558604047264202,
        1.7098842099403217e-62,
        -0.11241976368059116,
        -2.285429088305552e-62,
        0.1521267771179559,
        -8.228597172062816e-63,
        0.051737188455280386,
        4.0798261343628595e-63,
        -0.025612276897007284,
        2.1544253281959833e-63,
        -0.012963672514046178,
        -4.206915859035046e-64,
        0.0025455574818611633,
        -3.635710158599834e-64,
        0.0021193319510877775,
        1.4972316727568697e-65,
        -9.191391945156778e-05,
        4.265015216430241e-65,
        -0.00024413466533855272,
    ),
    (
        3.369099840108094e-05,
        1.8893118533200938e-65,
        -0.00048730387277374067,
        -1.3118945490261028e-64,
        0.0034913041151209494,
        4.063422636380132e-64,
        -0.010636181410824536,
        9.060730152716546e-64,
        -0.007962052861482919,
        -8.658093444332542e-63,
        0.1237587562368654,
        1.0922757264823951e-62,
        -0.1849404122581205,
        3.0672821613393344e-62,
        -0.30393580239679546,
        -6.354591930333615e-62,
        0.7612833126395632,
        -5.051190260513592e-62,
        0.4067440568556812,
        1.2472130696967978e-61,
        -1.2301721808541708,
        6.640658041097687e-62,
        -0.5117640855696522,
        -1.161201368328715e-61,
        0.9962463615472547,
        -6.350140050434496e-62,
        0.47056716161861106,
        5.7007809299136175e-62,
        -0.4414445866526114,
        3.698628267463231e-62,
        -0.25918493310535273,
        -1.5418968469900857e-62,
        0.11117688993542343,
        -1.3214705432654105e-62,
        0.08794868546608423,
        2.1243271676717667e-63,
        -0.014803271886103406,
        3.06428132529484e-63,
        -0.01961041509857541,
        -2.954679547923109e-65,
        0.00031650099641031916,
        -4.849235030788674e-64,
        0.0030274014208229155,
        -4.560613705342822e-65,
        0.0002675580524826069,
        5.4189481426588346e-65,
        -0.0003349691662856058,
        9.780526077995276e-66,
        -5.891092180278285e-05,
    ),
    (
        -4.590128878425808e-67,
        6.612479918279905e-05,
        4.6100161409291035e-66,
        -0.00044670409577338735,
        -1.8299804924645156e-65,
        0.0010840232068089312,
        -3.715528863403916e-64,
        0.005028543891765806,
        2.5443897564370393e-63,
        -0.03886148551530864,
        -4.327668285591104e-63,
        0.07707956741410073,
        -8.707313296652219e-63,
        0.06355969744063397,
        3.441665330130998e-62,
        -0.4074596273039508,
        -4.949053959531213e-63,
        0.1803375211195864,
        -8.264916648013636e-62,
        0.8064302485606453,
        3.940229364142905e-62,
        -0.5178358018314444,
        1.086388729498251e-61,
        -0.9482271795820716,
        -4.490182047163716e-62,
        0.4719558561190385,
        -8.883985949345621e-62,
        0.7154101522815643,
        2.0231502088374737e-62,
        -0.19296662747432222,
        4.5790057784686005e-62,
        -0.3455616621306974,
        -2.7314740726655717e-63,
        0.02925214982106185,
        -1.5191382445584494e-62,
        0.10909301099694024,
        -1.0130834082119485e-63,
        0.005308465692352872,
        3.353564428805458e-63,
        -0.023293443630578295,
        5.551953385587633e-64,
        -0.0035166634161813027,
        -5.071084248553022e-64,
        0.0034648237370005506,
        -1.3001288112262564e-64,
        0.0008444826314873812,
        5.319310069204184e-65,
        -0.00036395433452081826,
        1.9318910964705717e-65,
        -0.00012779454521633608,
    ),
    (
        2.2998616053774914e-06,
        -1.3417456707310052e-66,
        -1.6661460134756017e-05,
        -9.05643274937036e-66,
        0.00021651726303755734,
        1.251425565309374e-64,
        -0.002343882759419185,
        -6.67967932349759e-64,
        0.011553719960167519,
        1.1767585879634204e-63,
        -0.023923958250617165,
        2.870097427092607e-63,
        -0.015531185589661683,
        -1.4735837959334802e-62,
        0.16805416443062957,
        1.162998383771162e-62,
        -0.20767894058315825,
        3.4582255638327556e-62,
        -0.2705104450676808,
        -5.5797239899877386e-62,
        0.6603245514408408,
        -3.42337907117843e-62,
        0.17484627736385702,
        8.9867269092872e-62,
        -0.9023846247128909,
        2.3339445759675353e-62,
        -0.09498217268803395,
        -7.755844364439408e-62,
        0.7024752592447179,
        -1.6856412576106668e-62,
        0.09268759850778682,
        4.007674952762348e-62,
        -0.3377367996031938,
        1.0356857387145965e-62,
        -0.0684030352968404,
        -1.307053913967018e-62,
        0.1049550768961563,
        -4.2493572675290555e-63,
        0.029655264582841307,
        2.783980423568487e-63,
        -0.021780178965789616,
        1.146713025788249e-63,
        -0.008154606200272826,
        -3.91946690455333e-64,
        0.003059089916504363,
        -2.1248316416182946e-64,
        0.0015358125506332455,
        3.5075883042254407e-65,
        -0.0002820164500843279,
        2.8201730703494e-65,
        -0.00020917807822510448,
    ),
    (
        -4.788452830191976e-67,
        1.3785049235276064e-05,
        5.021321166178244e-66,
        -0.00010839881961903725,
        -2.8161906649838347e-65,
        0.0006957428517160688,
        1.336572429718915e-64,
        -0.002815724505727969,
        -1.7267413196678132e-64,
        0.005211812693764324,
        -1.1893515733917443e-63,
        0.007857703014180739,
        5.744222880149977e-63,
        -0.06487756825484776,
        -6.958924604095435e-63,
        0.11518535745143034,
        -1.2168747550575781e-62,
        0.048952510533941694,
        3.7316094171165117e-62,
        -0.3984617951978288,
        -5.906677720728293e-63,
        0.2388841555476167,
        -6.316579696408514e-62,
        0.554851440765866,
        3.6161471280879657e-62,
        -0.5214375112406927,
        6.029253882154867e-62,
        -0.486302251289854,
        -4.093172368976444e-62,
        0.4731537621842011,
        -3.975471747878126e-62,
        0.3150572881939161,
        2.308916079178827e-62,
        -0.2397340132830355,
        1.88834573128801e-62,
        -0.15010530854751547,
        -7.526718353517699e-63,
        0.07418116205616272,
        -6.369084549193441e-63,
        0.05092186598094616,
        1.4651910027231786e-63,
        -0.014388505815819836,
        1.521074946496154e-63,
        -0.012297668069341364,
        -1.5479100610423915e-64,
        0.001648126474687202,
        -2.608487313783063e-64,
        0.002157082055325076,
        1.878622516352278e-66,
        -6.29096020447585e-05,
        3.274202001218447e-65,
        -0.0002815677670411518,
    ),
)
