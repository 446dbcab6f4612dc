"""Reference values for the table reproductions, kept as the printed decimal strings.

Each row is a tuple of strings; numeric comparison happens in the callers.
"""

# (p, u, v, C) sample values of the height constant
C_SAMPLE = (
    ("0.51", "1.00", "0.20", "17.6603002053593"),
    ("0.51", "1.00", "0.40", "17.6630153331822"),
    ("0.51", "1.00", "0.60", "17.6610407898646"),
    ("0.51", "1.00", "0.80", "17.6856832509155"),
    ("0.60", "0.90", "0.60", "1.49524800151569"),
    ("0.60", "1.00", "0.20", "1.08391296918222"),
    ("0.60", "1.00", "0.60", "1.08391297098683"),
    ("0.60", "1.00", "0.80", "1.08391297046200"),
    ("0.60", "1.10", "0.20", "0.834656789094941"),
    ("0.60", "1.20", "0.60", "0.673917281982084"),
    ("0.70", "1.00", "0.60", "0.232497954955319"),
    ("0.80", "1.00", "0.60", "0.0287161523336721"),
    ("0.85", "1.00", "0.60", "0.00237172764900606"),
    ("0.93", "1.00", "0.60", "1.87317294616045e15"),
    ("0.97", "0.50", "0.60", "9.17733198126610e72"),
    ("0.97", "1.00", "0.60", "6.05478107453485e72"),
    ("0.97", "5.00", "0.60", "2.30524156812013e72"),
)

# (u_tilde, h1, h1/h1', h1') from the derivative table
H1_DERIVATIVE = (
    ("-0.50", "1.37683018271327", "-0.722028017914153", "-1.90689301322511"),
    ("-0.40", "1.20276152989834", "-0.760013160991751", "-1.58255355516324"),
    ("-0.30", "1.05800806833013", "-0.802220048867141", "-1.31885019555944"),
    ("-0.20", "0.937149181875061", "-0.849393914518373", "-1.10331515902895"),
    ("-0.10", "0.835870082265573", "-0.902466357406207", "-0.926206362603876"),
    ("0.00", "0.358367943474688", "0.000915198138561305", "391.574161239056"),
    ("0.10", "0.678937477362699", "-1.03136470454952", "-0.658290393657834"),
    ("0.20", "0.618287879529247", "-1.11069248821028", "-0.556668822461859"),
    ("0.30", "0.566972485392761", "-1.20324708128446", "-0.471202045042585"),
    ("0.40", "0.523532363681955", "-1.31263743584976", "-0.398840037152404"),
    ("0.50", "0.486782979369433", "-1.44391680699806", "-0.337126749276828"),
)

# (p, u_tilde, h1) value table; p is the limit point 1/2
H1_VALUES = (
    ("0.50", "-0.50", "1.37683018271327"),
    ("0.50", "-0.45", "1.28574151187623"),
    ("0.50", "-0.40", "1.20276152989834"),
    ("0.50", "-0.35", "1.12708836544424"),
    ("0.50", "-0.30", "1.05800806833013"),
    ("0.50", "-0.25", "0.994884277261959"),
    ("0.50", "-0.20", "0.937149181875062"),
    ("0.50", "-0.15", "0.884295608451989"),
    ("0.50", "-0.10", "0.835870082265572"),
    ("0.50", "-0.05", "0.791466739676032"),
    ("0.50", "0.00", "0.580594753668194"),
    ("0.50", "0.05", "0.713309765274110"),
    ("0.50", "0.10", "0.678937477362699"),
    ("0.50", "0.15", "0.647342275661044"),
    ("0.50", "0.20", "0.618287879529247"),
    ("0.50", "0.25", "0.591561730562133"),
    ("0.50", "0.30", "0.566972485392761"),
    ("0.50", "0.35", "0.544347799045552"),
    ("0.50", "0.40", "0.523532363681955"),
    ("0.50", "0.45", "0.504386172111908"),
    ("0.50", "0.50", "0.486782979369433"),
)

# (p, u, v, C/|grad C|_1, dC/dp, dC/du, dC/dv)
C_GRADIENT = (
    ("0.60", "0.8573214", "0.200", "0.0397029", "-37.3216755", "-6.87205829924586", "-1.70174985214544e-9"),
    ("0.60", "0.8573214", "0.400", "0.0397066", "-37.3175544", "-6.87205829422766", "8.17124146124115e-9"),
    ("0.60", "0.8573214", "0.600", "0.0397105", "-37.3133045", "-6.87205830278614", "6.75015598972095e-9"),
    ("0.60", "0.9573214", "0.200", "0.0477100", "-21.9600978", "-3.88671232717819", "1.68487446217114e-9"),
    ("0.60", "0.9573214", "0.400", "0.0477178", "-21.9558812", "-3.88671232690196", "6.52766729558607e-9"),
    ("0.60", "0.9573214", "0.600", "0.0477256", "-21.9516277", "-3.88671233292026", "2.35500507983488e-9"),
    ("0.60", "1.0573214", "0.200", "0.0556009", "-14.2980109", "-2.37660414946284", "3.01625391330163e-9"),
    ("0.60", "1.0573214", "0.400", "0.0556152", "-14.2937099", "-2.37660415074092", "4.62252458532930e-9"),
    ("0.60", "1.0573214", "0.600", "0.0556294", "-14.2894568", "-2.37660415496421", "-1.60316204755873e-10"),
    ("0.60", "1.1573214", "0.200", "0.0626269", "-10.1863196", "-1.54288334226127", "3.33222338610994e-9"),
    ("0.60", "1.1573214", "0.400", "0.0626503", "-10.1819434", "-1.54288334394570", "2.95541369155217e-9"),
    ("0.60", "1.1573214", "0.600", "0.0626730", "-10.1776934", "-1.54288334671548", "-1.49635859258979e-9"),
    ("0.70", "0.7419408", "0.200", "0.0466821", "-7.02015816", "-0.941410951563526", "0.00277949304106073"),
    ("0.70", "0.7419408", "0.400", "0.0468213", "-7.00927750", "-0.941036859551048", "0.00326076664425301"),
    ("0.70", "0.7419408", "0.600", "0.0469950", "-6.99412985", "-0.941080960885188", "0.00352113957369227"),
    ("0.70", "0.8419408", "0.200", "0.0492989", "-5.33811883", "-0.631417261109490", "0.00300199019243053"),
    ("0.70", "0.8419408", "0.400", "0.0495040", "-5.32611794", "-0.631168855463216", "0.00332417515469530"),
    ("0.70", "0.8419408", "0.600", "0.0497253", "-5.31304507", "-0.631258543609903", "0.00339509555136175"),
    ("0.70", "0.9419408", "0.200", "0.0514611", "-4.23520180", "-0.447473694530132", "0.00317392708737430"),
    ("0.70", "0.9419408", "0.400", "0.0517361", "-4.22295039", "-0.447305509108986", "0.00334798714618501"),
    ("0.70", "0.9419408", "0.600", "0.0520044", "-4.21164153", "-0.447402921736284", "0.00328784937675408"),
    ("0.70", "1.0419408", "0.200", "0.0532287", "-3.47206308", "-0.330624920881206", "0.00330789550107013"),
    ("0.70", "1.0419408", "0.400", "0.0535756", "-3.45998730", "-0.330507053556417", "0.00335245633964476"),
    ("0.70", "1.0419408", "0.600", "0.0538907", "-3.45007283", "-0.330597031821256", "0.00320084691018963"),
    ("0.70", "1.1419408", "0.200", "0.0546466", "-2.92151577", "-0.252543040933695", "0.00341430828054712"),
    ("0.70", "1.1419408", "0.400", "0.0550660", "-2.90980583", "-0.252456509284293", "0.00334836078108580"),
    ("0.70", "1.1419408", "0.600", "0.0554287", "-2.90095183", "-0.252534083156064", "0.00313143305508135"),
    ("0.70", "1.2419408", "0.200", "0.0557535", "-2.51064207", "-0.198272264594124", "0.00350094009471391"),
    ("0.70", "1.2419408", "0.400", "0.0562453", "-2.49936355", "-0.198205173826516", "0.00334130490875495"),
    ("0.70", "1.2419408", "0.600", "0.0566567", "-2.49129520", "-0.198269800136153", "0.00307611303140831"),
    ("0.70", "1.3419408", "0.200", "0.0565844", "-2.19510393", "-0.159366055272336", "0.00357337397538515"),
    ("0.70", "1.3419408", "0.400", "0.0571484", "-2.18425793", "-0.159310991691086", "0.00333409085406799"),
    ("0.70", "1.3419408", "0.600", "0.0576098", "-2.17675830", "-0.159363902270115", "0.00303165893500434"),
    ("0.70", "1.4419408", "0.200", "0.0571731", "-1.94654812", "-0.130808089307877", "0.00363555773552626"),
    ("0.70", "1.4419408", "0.400", "0.0578086", "-1.93610396", "-0.130760449668088", "0.00332801239988356"),
    ("0.70", "1.4419408", "0.600", "0.0583219", "-1.92900552", "-0.130803443699534", "0.00299540897730211"),
    ("0.80", "0.65", "0.200", "0.0248967", "-1.46956589776437", "-0.119459648828979", "0.0600241100414678"),
    ("0.80", "0.65", "0.400", "0.0290076", "-1.49636288594479", "-0.140905496493815", "-0.00268991132656993"),
    ("0.80", "0.65", "0.600", "0.0231229", "-1.58402037698124", "-0.134370873496437", "-0.0531169107773621"),
    ("0.80", "0.75", "0.200", "0.0237794", "-1.18806547561690", "-0.0793871424775716", "0.0485832481444959"),
    ("0.80", "0.75", "0.400", "0.0276804", "-1.20264660480984", "-0.0935985673038431", "-0.00629235525195782"),
    ("0.80", "0.75", "0.600", "0.0215052", "-1.26861837550507", "-0.0871968711919635", "-0.0437779185560316"),
    ("0.80", "0.85", "0.200", "0.0225818", "-0.992277554530574", "-0.0563859753697216", "0.0402965617070095"),
    ("0.80", "0.85", "0.400", "0.0262502", "-0.998636356683846", "-0.0661789200080420", "-0.00814619885147749"),
    ("0.80", "0.85", "0.600", "0.0198854", "-1.05095720444126", "-0.0603108685055531", "-0.0365389341325795"),
    ("0.80", "0.95", "0.200", "0.0213276", "-0.848335491866692", "-0.0420003183307927", "0.0341005124937510"),
    ("0.80", "0.95", "0.400", "0.0247639", "-0.849069631954080", "-0.0489517334756329", "-0.00902477816566716"),
    ("0.80", "0.95", "0.600", "0.0182823", "-0.892403384526119", "-0.0437039697658292", "-0.0308048695885077"),
    ("0.80", "1.05", "0.200", "0.0200260", "-0.738163948966530", "-0.0324361927255268", "0.0293485365574497"),
    ("0.80", "1.05", "0.400", "0.0232414", "-0.735010372125089", "-0.0374844296402443", "-0.00933903507416289"),
    ("0.80", "1.05", "0.600", "0.0166997", "-0.772209946390490", "-0.0328328708576464", "-0.0261777524244167"),
    ("0.80", "1.15", "0.200", "0.0186804", "-0.651184626946133", "-0.0257793005573603", "0.0256278809160904"),
    ("0.80", "1.15", "0.400", "0.0216908", "-0.645332988952418", "-0.0295103956773346", "-0.00931950613392019"),
    ("0.80", "1.15", "0.600", "0.0151354", "-0.678217958622440", "-0.0253954332265494", "-0.0223840630155792"),
    ("0.80", "1.25", "0.200", "0.0172908", "-0.580782272038505", "-0.0209780958471129", "0.0226643319933828"),
    ("0.80", "1.25", "0.400", "0.0201143", "-0.573064137057600", "-0.0237727883387606", "-0.00910101858409007"),
    ("0.80", "1.25", "0.600", "0.0135846", "-0.602835170141702", "-0.0201279084848238", "-0.0192308538302655"),
    ("0.80", "1.35", "0.200", "0.0158557", "-0.522603802636468", "-0.0174163026258611", "0.0202695748470205"),
    ("0.80", "1.35", "0.400", "0.0185105", "-0.513610382057550", "-0.0195302017260701", "-0.00876498700819184"),
    ("0.80", "1.35", "0.600", "0.0120405", "-0.541082442332197", "-0.0162926045703671", "-0.0165787548596086"),
    ("0.80", "1.45", "0.200", "0.0143716", "-0.473664745896940", "-0.0147138076727060", "0.0183106129867383"),
    ("0.80", "1.45", "0.400", "0.0168756", "-0.463822268983449", "-0.0163233325025658", "-0.00836177299845531"),
    ("0.80", "1.45", "0.600", "0.0104955", "-0.489561844233322", "-0.0134373556761602", "-0.0143249441002524"),
    ("0.80", "1.55", "0.200", "0.0128332", "-0.431847222870374", "-0.0126263003039639", "0.0166912413419595"),
    ("0.80", "1.55", "0.400", "0.0152035", "-0.421466433564888", "-0.0138561256477487", "-0.00792306972385859"),
    ("0.80", "1.55", "0.600", "0.0089402", "-0.445875381153371", "-0.0112737912587590", "-0.0123921213806000"),
    ("0.80", "1.65", "0.200", "0.0112335", "-0.395602281798801", "-0.0109913985113508", "0.0153404116502998"),
    ("0.80", "1.65", "0.400", "0.0134857", "-0.384911693686263", "-0.0119314480429011", "-0.00746903628368045"),
    ("0.80", "1.65", "0.600", "0.0073638", "-0.408280137456529", "-0.00961191538806361", "-0.0107211906978932"),
    ("0.80", "1.75", "0.200", "0.0095627", "-0.363765195132260", "-0.00969821012120065", "0.0142046951836505"),
    ("0.80", "1.75", "0.400", "0.0117111", "-0.352933892131091", "-0.0104145054677929", "-0.00701254332113876"),
    ("0.80", "1.75", "0.600", "0.0057536", "-0.375474526805419", "-0.00832317642363023", "-0.00926629099495813"),
    ("0.80", "1.85", "0.200", "0.0078081", "-0.335436119925703", "-0.00866939342358819", "0.0132432673112248"),
    ("0.80", "1.85", "0.400", "0.0098652", "-0.324589674384868", "-0.00921116843244363", "-0.00656177159186200"),
    ("0.80", "1.85", "0.600", "0.0040938", "-0.346460554688122", "-0.00731875624637723", "-0.00799135079532221"),
    ("0.80", "1.95", "0.200", "0.0059525", "-0.309899919159307", "-0.00785021919114115", "0.0124244891566150"),
    ("0.80", "1.95", "0.400", "0.0079291", "-0.299131685380871", "-0.00825469764720310", "-0.00612184077297684"),
    ("0.80", "1.95", "0.600", "0.0023648", "-0.320451686228296", "-0.00653637328440482", "-0.00686765290325297"),
)

# (p, u, v, C) grid values at v = 0.4 (plus the p = 0.97 rows)
C_GRID = (
    ("0.51", "0.980196058819607", "0.400", "29.9108624383664"),
    ("0.53", "0.941696582148512", "0.400", "10.0526228338624"),
    ("0.53", "0.991696582148512", "0.400", "5.88642519475933"),
    ("0.53", "1.04169658214851", "0.400", "3.93987124883441"),
    ("0.57", "0.868553950490285", "0.400", "3.52426761973916"),
    ("0.57", "0.918553950490285", "0.400", "2.69816719720437"),
    ("0.57", "0.968553950490285", "0.400", "2.13795667104722"),
    ("0.57", "1.01855395049029", "0.400", "1.74575802150213"),
    ("0.57", "1.06855395049029", "0.400", "1.46363184340248"),
    ("0.57", "1.11855395049029", "0.400", "1.25604047995371"),
    ("0.61", "0.799590058902111", "0.400", "1.77277314367910"),
    ("0.61", "0.849590058902111", "0.400", "1.46518133627806"),
    ("0.61", "0.899590058902111", "0.400", "1.23455159510288"),
    ("0.61", "0.949590058902111", "0.400", "1.05777607664529"),
    ("0.61", "0.999590058902111", "0.400", "0.919664990997429"),
    ("0.61", "1.04959005890211", "0.400", "0.809941704967424"),
    ("0.61", "1.09959005890211", "0.400", "0.721477392051825"),
    ("0.61", "1.14959005890211", "0.400", "0.649215937996586"),
    ("0.61", "1.19959005890211", "0.400", "0.589499096328785"),
    ("0.61", "1.24959005890211", "0.400", "0.539631267061691"),
    ("0.65", "0.733799385705343", "0.400", "0.982651282114738"),
    ("0.65", "0.783799385705343", "0.400", "0.839124203522317"),
    ("0.65", "0.833799385705343", "0.400", "0.727100276432193"),
    ("0.65", "0.883799385705343", "0.400", "0.637940561184182"),
    ("0.65", "0.933799385705343", "0.400", "0.565793172609293"),
    ("0.65", "0.983799385705343", "0.400", "0.506567343973066"),
    ("0.65", "1.03379938570534", "0.400", "0.457330788676269"),
    ("0.65", "1.08379938570534", "0.400", "0.415936629134123"),
    ("0.65", "1.13379938570534", "0.400", "0.380783719541390"),
    ("0.65", "1.18379938570534", "0.400", "0.350658093707974"),
    ("0.65", "1.23379938570534", "0.400", "0.324625450046327"),
    ("0.65", "1.28379938570534", "0.400", "0.301956613678465"),
    ("0.65", "1.33379938570534", "0.400", "0.282074753241104"),
    ("0.69", "0.670280062599836", "0.400", "0.550461162927249"),
    ("0.69", "0.720280062599836", "0.400", "0.476560662585850"),
    ("0.69", "0.770280062599836", "0.400", "0.418085884501238"),
    ("0.69", "0.820280062599836", "0.400", "0.370869235479415"),
    ("0.69", "0.870280062599836", "0.400", "0.332104766553185"),
    ("0.69", "0.920280062599836", "0.400", "0.299828522402899"),
    ("0.69", "0.970280062599836", "0.400", "0.272625293598979"),
    ("0.69", "1.02028006259984", "0.400", "0.249451145554923"),
    ("0.69", "1.07028006259984", "0.400", "0.229520731342754"),
    ("0.69", "1.12028006259984", "0.400", "0.212233117795916"),
    ("0.69", "1.17028006259984", "0.400", "0.197121539103930"),
    ("0.69", "1.22028006259984", "0.400", "0.183818532413344"),
    ("0.69", "1.27028006259984", "0.400", "0.172031239042804"),
    ("0.69", "1.32028006259984", "0.400", "0.161523580019521"),
    ("0.69", "1.37028006259984", "0.400", "0.152103170273795"),
    ("0.69", "1.42028006259984", "0.400", "0.143611550335309"),
    ("0.69", "1.47028006259984", "0.400", "0.135916766083619"),
    ("0.73", "0.608163640559537", "0.400", "0.293753647044937"),
    ("0.73", "0.658163640559537", "0.400", "0.254521707499460"),
    ("0.73", "0.708163640559537", "0.400", "0.223617820853438"),
    ("0.73", "0.758163640559537", "0.400", "0.198689182699194"),
    ("0.73", "0.808163640559537", "0.400", "0.178200553380755"),
    ("0.73", "0.858163640559537", "0.400", "0.161099962106000"),
    ("0.73", "0.908163640559537", "0.400", "0.146640237980822"),
    ("0.73", "0.958163640559537", "0.400", "0.134275597770952"),
    ("0.73", "1.00816364055954", "0.400", "0.123598129339214"),
    ("0.73", "1.05816364055954", "0.400", "0.114297028223827"),
    ("0.73", "1.10816364055954", "0.400", "0.106131513996562"),
    ("0.73", "1.15816364055954", "0.400", "0.0989123176383000"),
    ("0.73", "1.20816364055954", "0.400", "0.0924887213278005"),
    ("0.73", "1.25816364055954", "0.400", "0.0867392964169298"),
    ("0.73", "1.30816364055954", "0.400", "0.0815651633709091"),
    ("0.73", "1.35816364055954", "0.400", "0.0768850068928071"),
    ("0.73", "1.40816364055954", "0.400", "0.0726313343834271"),
    ("0.73", "1.45816364055954", "0.400", "0.0687476288039068"),
    ("0.73", "1.50816364055954", "0.400", "0.0651861534672111"),
    ("0.73", "1.55816364055954", "0.400", "0.0619062371781993"),
    ("0.73", "1.60816364055954", "0.400", "0.0588729160730193"),
    ("0.77", "0.546535725000021", "0.400", "0.145533658462583"),
    ("0.77", "0.596535725000021", "0.400", "0.124327954267287"),
    ("0.77", "0.646535725000021", "0.400", "0.107945853943789"),
    ("0.77", "0.696535725000021", "0.400", "0.0949108647641168"),
    ("0.77", "0.746535725000021", "0.400", "0.0843029431585052"),
    ("0.77", "0.796535725000021", "0.400", "0.0755136117642792"),
    ("0.77", "0.846535725000021", "0.400", "0.0681223833348810"),
    ("0.77", "0.896535725000021", "0.400", "0.0618286193771169"),
    ("0.77", "0.946535725000021", "0.400", "0.0564114016933814"),
    ("0.77", "0.996535725000021", "0.400", "0.0517046696768304"),
    ("0.77", "1.04653572500002", "0.400", "0.0475811789582821"),
    ("0.77", "1.09653572500002", "0.400", "0.0439418020113962"),
    ("0.77", "1.14653572500002", "0.400", "0.0407081902919728"),
    ("0.77", "1.19653572500002", "0.400", "0.0378176207163818"),
    ("0.77", "1.24653572500002", "0.400", "0.0352193008652932"),
    ("0.77", "1.29653572500002", "0.400", "0.0328716716127033"),
    ("0.77", "1.34653572500002", "0.400", "0.0307404059773191"),
    ("0.77", "1.39653572500002", "0.400", "0.0287969028851336"),
    ("0.77", "1.44653572500002", "0.400", "0.0270171384844815"),
    ("0.77", "1.49653572500002", "0.400", "0.0253807795447578"),
    ("0.77", "1.54653572500002", "0.400", "0.0238704914680881"),
    ("0.77", "1.59653572500002", "0.400", "0.0224713924978488"),
    ("0.77", "1.64653572500002", "0.400", "0.0211706188873642"),
    ("0.77", "1.69653572500002", "0.400", "0.0199569750386104"),
    ("0.77", "1.74653572500002", "0.400", "0.0188206491934295"),
    ("0.77", "1.79653572500002", "0.400", "0.0177529799785283"),
    ("0.81", "0.484322104837853", "0.400", "0.0760870936626361"),
    ("0.81", "0.534322104837853", "0.400", "0.0675499639584132"),
    ("0.81", "0.584322104837853", "0.400", "0.0605278017367255"),
    ("0.81", "0.634322104837853", "0.400", "0.0546912979618810"),
    ("0.81", "0.684322104837853", "0.400", "0.0497865208840267"),
    ("0.81", "0.734322104837853", "0.400", "0.0456211260755595"),
    ("0.81", "0.784322104837853", "0.400", "0.0420491692950691"),
    ("0.81", "0.834322104837853", "0.400", "0.0389589632508773"),
    ("0.81", "0.884322104837853", "0.400", "0.0362641022489925"),
    ("0.81", "0.934322104837853", "0.400", "0.0338969726150253"),
    ("0.81", "0.984322104837853", "0.400", "0.0318040708586409"),
    ("0.81", "1.03432210483785", "0.400", "0.0299426063306214"),
    ("0.81", "1.08432210483785", "0.400", "0.0282780131573759"),
    ("0.81", "1.13432210483785", "0.400", "0.0267821087966240"),
    ("0.81", "1.18432210483785", "0.400", "0.0254317162361133"),
    ("0.81", "1.23432210483785", "0.400", "0.0242076219697651"),
    ("0.81", "1.28432210483785", "0.400", "0.0230937796962394"),
    ("0.81", "1.33432210483785", "0.400", "0.0220766957561978"),
    ("0.81", "1.38432210483785", "0.400", "0.0211449503674146"),
    ("0.81", "1.43432210483785", "0.400", "0.0202888213490553"),
    ("0.81", "1.48432210483785", "0.400", "0.0194999859288600"),
    ("0.81", "1.53432210483785", "0.400", "0.0187712825802748"),
    ("0.81", "1.58432210483785", "0.400", "0.0180965194068392"),
    ("0.81", "1.63432210483785", "0.400", "0.0174703189090337"),
    ("0.81", "1.68432210483785", "0.400", "0.0168879914158993"),
    ("0.81", "1.73432210483785", "0.400", "0.0163454312572640"),
    ("0.81", "1.78432210483785", "0.400", "0.0158390311067080"),
    ("0.81", "1.83432210483785", "0.400", "0.0153656109424389"),
    ("0.81", "1.88432210483785", "0.400", "0.0149223588338145"),
    ("0.81", "1.93432210483785", "0.400", "0.0145067813642754"),
    ("0.81", "1.98432210483785", "0.400", "0.0141166619432482"),
    ("0.81", "2.03432210483785", "0.400", "0.0137500256186627"),
    ("0.85", "0.420084025208403", "0.400", "0.0186691810013144"),
    ("0.85", "0.470084025208403", "0.400", "0.0162646973694791"),
    ("0.85", "0.520084025208403", "0.400", "0.0143518941913499"),
    ("0.85", "0.570084025208403", "0.400", "0.0128045473320526"),
    ("0.85", "0.620084025208403", "0.400", "0.0115330738808552"),
    ("0.85", "0.670084025208403", "0.400", "0.0104734953492880"),
    ("0.85", "0.720084025208403", "0.400", "0.00957942237801035"),
    ("0.85", "0.770084025208403", "0.400", "0.00881663551626843"),
    ("0.85", "0.820084025208403", "0.400", "0.00815946033617365"),
    ("0.85", "0.870084025208403", "0.400", "0.00758832384963171"),
    ("0.85", "0.920084025208403", "0.400", "0.00708808343006240"),
    ("0.85", "0.970084025208403", "0.400", "0.00664686534582870"),
    ("0.85", "1.02008402520840", "0.400", "0.00625524408678757"),
    ("0.85", "1.07008402520840", "0.400", "0.00590565337915905"),
    ("0.85", "1.12008402520840", "0.400", "0.00559195686946623"),
    ("0.85", "1.17008402520840", "0.400", "0.00530913114198484"),
    ("0.85", "1.22008402520840", "0.400", "0.00505302824785758"),
    ("0.85", "1.27008402520840", "0.400", "0.00482019595983729"),
    ("0.85", "1.32008402520840", "0.400", "0.00460774000566744"),
    ("0.85", "1.37008402520840", "0.400", "0.00441321739799605"),
    ("0.85", "1.42008402520840", "0.400", "0.00423455315103638"),
    ("0.85", "1.47008402520840", "0.400", "0.00406997450318158"),
    ("0.85", "1.52008402520840", "0.400", "0.00391795871382783"),
    ("0.85", "1.57008402520840", "0.400", "0.00377719110929320"),
    ("0.85", "1.62008402520840", "0.400", "0.00364653129327053"),
    ("0.85", "1.67008402520840", "0.400", "0.00352498564643611"),
    ("0.85", "1.72008402520840", "0.400", "0.00341168480917986"),
    ("0.85", "1.77008402520840", "0.400", "0.00330586520067300"),
    ("0.85", "1.82008402520840", "0.400", "0.00320685363931261"),
    ("0.85", "1.87008402520840", "0.400", "0.00311405461434333"),
    ("0.85", "1.92008402520840", "0.400", "0.00302693959019962"),
    ("0.85", "1.97008402520840", "0.400", "0.00294503804752821"),
    ("0.85", "2.02008402520840", "0.400", "0.00286792988845264"),
    ("0.85", "2.07008402520840", "0.400", "0.00279523901235734"),
    ("0.85", "2.12008402520840", "0.400", "0.00272662785891953"),
    ("0.85", "2.17008402520840", "0.400", "0.00266179269510758"),
    ("0.85", "2.22008402520840", "0.400", "0.00260045962977529"),
    ("0.85", "2.27008402520840", "0.400", "0.00254238115849148"),
    ("0.85", "2.32008402520840", "0.400", "0.00248733315356731"),
    ("0.85", "2.37008402520840", "0.400", "0.00243511230246440"),
    ("0.89", "0.351561524655326", "0.400", "0.00145292282104492"),
    ("0.89", "0.401561524655326", "0.400", "0.00118577480316162"),
    ("0.89", "0.451561524655326", "0.400", "0.000993013381958008"),
    ("0.89", "0.501561524655326", "0.400", "0.000848412513732910"),
    ("0.89", "0.551561524655326", "0.400", "0.000735878944396973"),
    ("0.89", "0.601561524655326", "0.400", "0.000646829605102539"),
    ("0.89", "0.651561524655326", "0.400", "0.000574707984924316"),
    ("0.89", "0.701561524655326", "0.400", "0.000515460968017578"),
    ("0.89", "0.751561524655326", "0.400", "0.000466108322143555"),
    ("0.89", "0.801561524655326", "0.400", "0.000424087047576904"),
    ("0.89", "0.851561524655326", "0.400", "0.000387966632843018"),
    ("0.89", "0.901561524655326", "0.400", "0.000357031822204590"),
    ("0.89", "0.951561524655326", "0.400", "0.000330328941345215"),
    ("0.89", "1.00156152465533", "0.400", "0.000306487083435059"),
    ("0.89", "1.05156152465533", "0.400", "0.000285655260086060"),
    ("0.89", "1.10156152465533", "0.400", "0.000267118215560913"),
    ("0.89", "1.15156152465533", "0.400", "0.000250488519668579"),
    ("0.89", "1.20156152465533", "0.400", "0.000235617160797119"),
    ("0.89", "1.25156152465533", "0.400", "0.000222235918045044"),
    ("0.89", "1.30156152465533", "0.400", "0.000210016965866089"),
    ("0.89", "1.35156152465533", "0.400", "0.000198870897293091"),
    ("0.89", "1.40156152465533", "0.400", "0.000188708305358887"),
    ("0.89", "1.45156152465533", "0.400", "0.000179469585418701"),
    ("0.89", "1.50156152465533", "0.400", "0.000171035528182983"),
    ("0.89", "1.55156152465533", "0.400", "0.000163167715072632"),
    ("0.89", "1.60156152465533", "0.400", "0.000155717134475708"),
    ("0.89", "1.65156152465533", "0.400", "0.000149309635162354"),
    ("0.89", "1.70156152465533", "0.400", "0.000143021345138550"),
    ("0.89", "1.75156152465533", "0.400", "0.000137194991111755"),
    ("0.89", "1.80156152465533", "0.400", "0.000131785869598389"),
    ("0.89", "1.85156152465533", "0.400", "0.000126823782920837"),
    ("0.89", "1.90156152465533", "0.400", "0.000121921300888062"),
    ("0.89", "1.95156152465533", "0.400", "0.000117585062980652"),
    ("0.89", "2.00156152465533", "0.400", "0.000113427639007568"),
    ("0.89", "2.05156152465533", "0.400", "0.000109493732452393"),
    ("0.89", "2.10156152465533", "0.400", "0.000105798244476318"),
    ("0.89", "2.15156152465533", "0.400", "0.000102311372756958"),
    ("0.89", "2.20156152465533", "0.400", "0.0000989884138107300"),
    ("0.89", "2.25156152465533", "0.400", "0.0000958889722824097"),
    ("0.89", "2.30156152465533", "0.400", "0.0000930279493331909"),
    ("0.89", "2.35156152465533", "0.400", "0.0000902861356735229"),
    ("0.89", "2.40156152465533", "0.400", "0.0000875443220138550"),
    ("0.89", "2.45156152465533", "0.400", "0.0000850409269332886"),
    ("0.89", "2.50156152465533", "0.400", "0.0000825822353363037"),
    ("0.89", "2.55156152465533", "0.400", "0.0000803321599960327"),
    ("0.89", "2.60156152465533", "0.400", "0.0000781416893005371"),
    ("0.89", "2.65156152465533", "0.400", "0.0000760406255722046"),
    ("0.89", "2.70156152465532", "0.400", "0.0000741034746170044"),
    ("0.89", "2.75156152465532", "0.400", "0.0000721588730812073"),
    ("0.89", "2.80156152465532", "0.400", "0.0000703781843185425"),
    ("0.93", "0.274351630584367", "0.400", "5.08388570706080e18"),
    ("0.93", "0.324351630584367", "0.400", "4.02164584183275e18"),
    ("0.93", "0.374351630584367", "0.400", "3.29029412228838e18"),
    ("0.93", "0.424351630584367", "0.400", "2.76064216553067e18"),
    ("0.93", "0.474351630584367", "0.400", "2.36203204644596e18"),
    ("0.93", "0.524351630584367", "0.400", "2.05283796276531e18"),
    ("0.93", "0.574351630584367", "0.400", "1.80707983941192e18"),
    ("0.93", "0.624351630584367", "0.400", "1.60777544694030e18"),
    ("0.93", "0.674351630584367", "0.400", "1.44339556221551e18"),
    ("0.93", "0.724351630584367", "0.400", "1.30586151661967e18"),
    ("0.93", "0.774351630584367", "0.400", "1.18935865797586e18"),
    ("0.93", "0.824351630584367", "0.400", "1.08960438065609e18"),
    ("0.93", "0.874351630584367", "0.400", "1.00338075849318e18"),
    ("0.93", "0.924351630584367", "0.400", "9.28227105214006e17"),
    ("0.93", "0.974351630584367", "0.400", "8.62232402787871e17"),
    ("0.93", "1.02435163058437", "0.400", "8.03891902568485e17"),
    ("0.93", "1.07435163058437", "0.400", "7.52006018232347e17"),
    ("0.93", "1.12435163058437", "0.400", "7.05607724938857e17"),
    ("0.93", "1.17435163058437", "0.400", "6.63909564478263e17"),
    ("0.93", "1.22435163058437", "0.400", "6.26264382665951e17"),
    ("0.93", "1.27435163058437", "0.400", "5.92135844931128e17"),
    ("0.93", "1.32435163058437", "0.400", "5.61076019967838e17"),
    ("0.93", "1.37435163058437", "0.400", "5.32708143146652e17"),
    ("0.93", "1.42435163058437", "0.400", "5.06713224060254e17"),
    ("0.93", "1.47435163058437", "0.400", "4.82819540336550e17"),
    ("0.93", "1.52435163058437", "0.400", "4.60794321949106e17"),
    ("0.93", "1.57435163058437", "0.400", "4.40437114631546e17"),
    ("0.93", "1.62435163058437", "0.400", "4.21574442377283e17"),
    ("0.93", "1.67435163058437", "0.400", "4.04055483735086e17"),
    ("0.93", "1.72435163058437", "0.400", "3.87748545677684e17"),
    ("0.93", "1.77435163058437", "0.400", "3.72538169700794e17"),
    ("0.93", "1.82435163058437", "0.400", "3.58322742657385e17"),
    ("0.93", "1.87435163058437", "0.400", "3.45012513242157e17"),
    ("0.93", "1.92435163058437", "0.400", "3.32527936550119e17"),
    ("0.93", "1.97435163058437", "0.400", "3.20798285548969e17"),
    ("0.93", "2.02435163058437", "0.400", "3.09760480929080e17"),
    ("0.93", "2.07435163058437", "0.400", "2.99358100573060e17"),
    ("0.93", "2.12435163058437", "0.400", "2.89540537512205e17"),
    ("0.93", "2.17435163058437", "0.400", "2.80262281222224e17"),
    ("0.93", "2.22435163058437", "0.400", "2.71482301836819e17"),
    ("0.93", "2.27435163058437", "0.400", "2.63163520611826e17"),
    ("0.93", "2.32435163058437", "0.400", "2.55272352970900e17"),
    ("0.93", "2.37435163058437", "0.400", "2.47778312871162e17"),
    ("0.93", "2.42435163058437", "0.400", "2.40653669169914e17"),
    ("0.93", "2.47435163058437", "0.400", "2.33873146248732e17"),
    ("0.93", "2.52435163058437", "0.400", "2.27413662434387e17"),
    ("0.93", "2.57435163058437", "0.400", "2.21254100805868e17"),
    ("0.93", "2.62435163058437", "0.400", "2.15375107839294e17"),
    ("0.93", "2.67435163058437", "0.400", "2.09758916054065e17"),
    ("0.93", "2.72435163058437", "0.400", "2.04389187412840e17"),
    ("0.93", "2.77435163058437", "0.400", "1.99250874717724e17"),
    ("0.93", "2.82435163058437", "0.400", "1.94330098653627e17"),
    ("0.93", "2.87435163058437", "0.400", "1.89614038471800e17"),
    ("0.97", "0.50", "0.60", "9.17733198126610e72"),
    ("0.97", "1.00", "0.60", "6.05478107453485e72"),
    ("0.97", "3.00", "0.60", "3.13202840384780e72"),
    ("0.97", "5.00", "0.60", "2.30524156812013e72"),
)

