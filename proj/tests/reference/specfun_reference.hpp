// Generated by tools/oracle/gen_reference.py. Do not edit by hand.
#pragma once

namespace csg::testref {

inline constexpr int kSpecfunPoints = 200;

// columns: x, K0, K1, g1, g2, h1, h2, h3, h4
inline constexpr double kSpecfunTable[200][9] = {
    {9.99999999999998201e-09, 1.85366122596107807e+01, 1.00000000000000089e+08, -4.99999999999999778e-01, 9.01830612980539037e+00, 1.00000000000000000e+00, -4.99999993333331549e-17, 4.99999999999998202e-17, 1.49999999999999455e-16},
    {1.13282171155340221e-08, 1.84119006495647071e+01, 8.82751442527289391e+07, -4.99999999999999667e-01, 8.95595032478235353e+00, 9.99999999999999889e-01, -6.41642505391835595e-17, 6.41642515083389821e-17, 1.92492754525016934e-16},
    {1.28328503016678195e-08, 1.82871890395186334e+01, 7.79250109284009635e+07, -4.99999999999999611e-01, 8.89359451975931670e+00, 9.99999999999999889e-01, -8.23410220236145648e-17, 8.23410234325079142e-17, 2.47023070297523779e-16},
    {1.45373314428439087e-08, 1.81624774294725633e+01, 6.87884158060009181e+07, -4.99999999999999500e-01, 8.83123871473628164e+00, 9.99999999999999889e-01, -1.05667000691394105e-16, 1.05667002739549074e-16, 3.17001008218647246e-16},
    {1.64682046865015569e-08, 1.80377658194264896e+01, 6.07230732819142342e+07, -4.99999999999999389e-01, 8.76888290971324480e+00, 9.99999999999999889e-01, -1.35600879820785163e-16, 1.35600882798255922e-16, 4.06802648394767740e-16},
    {1.86555398191744840e-08, 1.79130542093804159e+01, 5.36033805343000367e+07, -4.99999999999999167e-01, 8.70652710469020796e+00, 9.99999999999999778e-01, -1.74014578643954445e-16, 1.74014582972402357e-16, 5.22043748917207070e-16},
    {2.11334005479099255e-08, 1.77883425993343423e+01, 4.73184614909925163e+07, -4.99999999999998945e-01, 8.64417129966717290e+00, 9.99999999999999778e-01, -2.23310303066791550e-16, 2.23310309359199725e-16, 6.69930928077599273e-16},
    {2.39403749796269734e-08, 1.76636309892882686e+01, 4.17704401393455639e+07, -4.99999999999998668e-01, 8.58181549464413607e+00, 9.99999999999999667e-01, -2.86570767935092239e-16, 2.86570777082574546e-16, 8.59712331247723737e-16},
    {2.71201765596512256e-08, 1.75389193792422020e+01, 3.68729162880071476e+07, -4.99999999999998335e-01, 8.51945968962110101e+00, 9.99999999999999667e-01, -3.67751975015329638e-16, 3.67751988313327818e-16, 1.10325596493998370e-15},
    {3.07223248279346169e-08, 1.74142077691961283e+01, 3.25496200434262194e+07, -4.99999999999997835e-01, 8.45710388459806595e+00, 9.99999999999999556e-01, -4.71930602084823145e-16, 4.71930621416563785e-16, 1.41579186424969165e-15},
    {3.48029165944805354e-08, 1.72894961591500547e+01, 2.87332240470495857e+07, -4.99999999999997280e-01, 8.39474807957502911e+00, 9.99999999999999445e-01, -6.05621473637992005e-16, 6.05621501741184138e-16, 1.81686450522355261e-15},
    {3.94254995436098183e-08, 1.71647845491039845e+01, 2.53642949759927318e+07, -4.99999999999996503e-01, 8.33239227455199405e+00, 9.99999999999999223e-01, -7.77184966277047015e-16, 7.77185007131588670e-16, 2.33155502139476650e-15},
    {4.46620618718400304e-08, 1.70400729390579109e+01, 2.23903679787451699e+07, -4.99999999999995559e-01, 8.27003646952895721e+00, 9.99999999999999001e-01, -9.97349825930432010e-16, 9.97349885322033084e-16, 2.99204965596610004e-15},
    {5.05941533711616802e-08, 1.69153613290118443e+01, 1.97651296319540925e+07, -4.99999999999994338e-01, 8.20768066450592571e+00, 9.99999999999998668e-01, -1.27988409133277602e-15, 1.27988417767231467e-15, 3.83965253301694521e-15},
    {5.73141554165148126e-08, 1.67906497189657742e+01, 1.74476966943462305e+07, -4.99999999999992784e-01, 8.14532485948289064e+00, 9.99999999999998335e-01, -1.64245608003955761e-15, 1.64245620555420571e-15, 4.92736861666262029e-15},
    {6.49267196351741214e-08, 1.66659381089197041e+01, 1.54019794257126264e+07, -4.99999999999990841e-01, 8.08296905445985736e+00, 9.99999999999997891e-01, -2.10773927882744695e-15, 2.10773946129225031e-15, 6.32321838387675488e-15},
    {7.35503976626659735e-08, 1.65412264988736339e+01, 1.35961195558233093e+07, -4.99999999999988287e-01, 8.02061324943682408e+00, 9.99999999999997335e-01, -2.70483023291301619e-15, 2.70483049816814638e-15, 8.11449149450444662e-15},
    {8.33194873656547658e-08, 1.64165148888275674e+01, 1.20019941506763585e+07, -4.99999999999985123e-01, 7.95825744441379168e+00, 9.99999999999996558e-01, -3.47106810182757434e-15, 3.47106848743774595e-15, 1.04132054623132497e-14},
    {9.43861242833129419e-08, 1.62918032787815079e+01, 1.05947776497135069e+07, -4.99999999999981015e-01, 7.89590163939076284e+00, 9.99999999999995559e-01, -4.45436966803820538e-15, 4.45437022861248892e-15, 1.33631106858374849e-14},
    {1.06922650857514899e-07, 1.61670916687354449e+01, 9.35255525354028679e+06, -4.99999999999975797e-01, 7.83354583436773400e+00, 9.99999999999994338e-01, -5.71622581827359227e-15, 5.71622663319899980e-15, 1.71486798995970302e-14},
    {1.21124300348237105e-07, 1.60423800586893819e+01, 8.25598164137864579e+06, -4.99999999999969191e-01, 7.77119002934470693e+00, 9.99999999999992673e-01, -7.33554688274088659e-15, 7.33554806742494837e-15, 2.20066442022748987e-14},
    {1.37212237231198289e-07, 1.59176684486433277e+01, 7.28797970340558607e+06, -4.99999999999960754e-01, 7.70883422432168341e+00, 9.99999999999990563e-01, -9.41359730078080847e-15, 9.41359902299527482e-15, 2.82407970689859112e-14},
    {1.55437001426317791e-07, 1.57929568385972754e+01, 6.43347459629061259e+06, -4.99999999999950040e-01, 7.64647841929866345e+00, 9.99999999999987899e-01, -1.20803282025622706e-14, 1.20803307062024862e-14, 3.62409921186076069e-14},
    {1.76082409994489951e-07, 1.56682452285512319e+01, 5.67915898033791035e+06, -4.99999999999936384e-01, 7.58412261427564793e+00, 9.99999999999984457e-01, -1.55025039151089999e-14, 1.55025075547337066e-14, 4.65075226642013627e-14},
    {1.99469977064406342e-07, 1.55435336185051938e+01, 5.01328578223475441e+06, -4.99999999999918954e-01, 7.52176680925263774e+00, 9.99999999999980127e-01, -1.98941305839942193e-14, 1.98941358750371982e-14, 5.96824076251119921e-14},
    {2.25963920821619099e-07, 1.54188220084591645e+01, 4.42548525606889091e+06, -4.99999999999896805e-01, 7.45941100422963377e+00, 9.99999999999974465e-01, -2.55298390647747543e-14, 2.55298467565391460e-14, 7.65895402696180912e-14},
    {2.55976835534464026e-07, 1.52941103984131512e+01, 3.90660349367763521e+06, -4.99999999999868605e-01, 7.39705519920664134e+00, 9.99999999999967248e-01, -3.27620589833459022e-14, 3.27620701651184864e-14, 9.82862104953565257e-14},
    {2.89976116948175774e-07, 1.51693987883671504e+01, 3.44855986942559201e+06, -4.99999999999832689e-01, 7.33469939418365868e+00, 9.99999999999957923e-01, -4.20430579448571728e-14, 4.20430742001701718e-14, 1.26129222600512289e-13},
    {3.28491241110841991e-07, 1.50446871783211709e+01, 3.04422119937661849e+06, -4.99999999999786948e-01, 7.27234358916069201e+00, 9.99999999999946043e-01, -5.39532241123826139e-14, 5.39532477432692088e-14, 1.61859743229810536e-13},
    {3.72122009985486049e-07, 1.49199755682752162e+01, 2.68729065512124775e+06, -4.99999999999728773e-01, 7.20998778413774311e+00, 9.99999999999930722e-01, -6.92373608048147388e-14, 6.92373951578166971e-14, 2.07712185473454862e-13},
    {4.21547892258451288e-07, 1.47952639582292917e+01, 2.37220970229769358e+06, -4.99999999999654721e-01, 7.14763197911481907e+00, 9.99999999999911182e-01, -8.88512627936717905e-14, 8.88513127337674767e-14, 2.66553938201310331e-13},
    {4.77538604809947984e-07, 1.46705523481834117e+01, 2.09407153667974705e+06, -4.99999999999560407e-01, 7.08527617409192612e+00, 9.99999999999885980e-01, -1.14021486942340068e-13, 1.14021559541909330e-13, 3.42064678625741017e-13},
    {5.40966099633630027e-07, 1.45458407381375832e+01, 1.84854466975851124e+06, -4.99999999999440448e-01, 7.02292036906907136e+00, 9.99999999999853673e-01, -1.46322054936005449e-13, 1.46322160476400564e-13, 4.38966481429223074e-13},
    {6.12818142879337025e-07, 1.44211291280918203e+01, 1.63180547380448016e+06, -4.99999999999287792e-01, 6.96056456404626633e+00, 9.99999999999812261e-01, -1.87772884693459983e-13, 1.87773038121022130e-13, 5.63319114363101706e-13},
    {6.94213697487549184e-07, 1.42964175180461428e+01, 1.44047863592373114e+06, -4.99999999999093558e-01, 6.89820875902352437e+00, 9.99999999999759082e-01, -2.40966105846919448e-13, 2.40966328889638188e-13, 7.22898986668972675e-13},
    {7.86420348971662743e-07, 1.41717059080005718e+01, 1.27158459379017958e+06, -4.99999999998846423e-01, 6.83585295400086235e+00, 9.99999999999690803e-01, -3.09228158393737696e-13, 3.09228482638308070e-13, 9.27685447915019834e-13},
    {8.90874045722504379e-07, 1.40469942979551377e+01, 1.12249313446237077e+06, -4.99999999998532008e-01, 6.77349714897830335e+00, 9.99999999999603206e-01, -3.96827811305870764e-13, 3.96828282670912675e-13, 1.19048484801289544e-12},
    {1.00920146125386966e-06, 1.39222826879098811e+01, 9.90882433672081796e+05, -4.99999999998132050e-01, 6.71114134395587492e+00, 9.99999999999490741e-01, -5.09243109459419513e-13, 5.09243794698343213e-13, 1.52773138409528904e-12},
    {1.14324532663980508e-06, 1.37975710778648430e+01, 8.74702897697232431e+05, -4.99999999997623290e-01, 6.64878553893360991e+00, 9.99999999999346523e-01, -6.53503942287228776e-13, 6.53504938441663757e-13, 1.96051481532541839e-12},
    {1.29509312764953477e-06, 1.36728594678200874e+01, 7.72145244723068434e+05, -4.99999999996976141e-01, 6.58642973391155540e+00, 9.99999999999161338e-01, -8.38631656499621419e-13, 8.38633104642175467e-13, 2.51589931392722969e-12},
    {1.46710961348499745e-06, 1.35481478577756889e+01, 6.81612328617671621e+05, -4.99999999996153077e-01, 6.52407392888976823e+00, 9.99999999998923750e-01, -1.07620320377691337e-12, 1.07620530898947015e-12, 3.22861592696956884e-12},
    {1.66197362338452507e-06, 1.34234362477317486e+01, 6.01694266329161939e+05, -4.99999999995106359e-01, 6.46171812386832123e+00, 9.99999999998618883e-01, -1.38107510199516772e-12, 1.38107816241198984e-12, 4.14323448723787712e-12},
    {1.88271980459906727e-06, 1.32987246376883874e+01, 5.31146481559691369e+05, -4.99999999993775313e-01, 6.39936231884730677e+00, 9.99999999998227640e-01, -1.77231248228457128e-12, 1.77231693131320451e-12, 5.31695079394275422e-12},
    {2.13278587142140634e-06, 1.31740130276457617e+01, 4.68870322786996316e+05, -4.99999999992082833e-01, 6.33700651382683944e+00, 9.99999999997725597e-01, -2.27438131896562636e-12, 2.27438778666479749e-12, 6.82316335999956518e-12},
    {2.41606614124051621e-06, 1.30493014176040720e+01, 4.13895953794960747e+05, -4.99999999989931054e-01, 6.27465070880707110e+00, 9.99999999997081335e-01, -2.91867839711350491e-12, 2.91868779942015962e-12, 8.75606339826899825e-12},
    {2.73697218134631027e-06, 1.29245898075635743e+01, 3.65367250264787290e+05, -4.99999999987195409e-01, 6.21229490378818916e+00, 9.99999999996254552e-01, -3.74549469228324854e-12, 3.74550836072477562e-12, 1.12365250821883558e-11},
    {3.10050151094677613e-06, 1.27998781975245901e+01, 3.22528467219069717e+05, -4.99999999983717969e-01, 6.14993909877043610e+00, 9.99999999995193400e-01, -4.80653493941900908e-12, 4.80655480968006970e-12, 1.44196644290633112e-11},
    {3.51231542830464290e-06, 1.26751665874875261e+01, 2.84712469688812213e+05, -4.99999999979297782e-01, 6.08758329375411389e+00, 9.99999999993831823e-01, -6.16815094788622261e-12, 6.16817983393439070e-12, 1.85045395018412176e-11},
    {3.97882717500748685e-06, 1.25504549774529082e+01, 2.51330343317768507e+05, -4.99999999973679943e-01, 6.02522748873961422e+00, 9.99999999992084443e-01, -7.91549085166676562e-12, 7.91553284425770081e-12, 2.37465985328357613e-11},
    {4.50730181036717738e-06, 1.24257433674213935e+01, 2.21862223108427483e+05, -4.99999999966540598e-01, 5.96287168372742649e+00, 9.99999999989842125e-01, -1.01578237588209629e-11, 1.01578848048180256e-11, 3.04736544145572628e-11},
    {5.10596935130790347e-06, 1.23010317573938242e+01, 1.95849197484309378e+05, -4.99999999957468466e-01, 5.90051587871817773e+00, 9.99999999986964538e-01, -1.30353727636134562e-11, 1.30354615081628654e-11, 3.91063845246585172e-11},
    {5.78415293968783405e-06, 1.21763201473712677e+01, 1.72886161589274474e+05, -4.99999999945941465e-01, 5.83816007371266288e+00, 9.99999999983271826e-01, -1.67280836038825584e-11, 1.67282126147097905e-11, 5.01846378444092043e-11},
    {6.55241403302381488e-06, 1.20516085373550776e+01, 1.52615508527179074e+05, -4.99999999931296735e-01, 5.77580426871189001e+00, 9.99999999978533061e-01, -2.14668772826458363e-11, 2.14670648298532908e-11, 6.44011944900207056e-11},
    {7.42271687969658213e-06, 1.19268969273469718e+01, 1.34721560294582625e+05, -4.99999999912693061e-01, 5.71344846371713899e+00, 9.99999999972451814e-01, -2.75480902942731966e-11, 2.75483629376868265e-11, 8.26450888138193855e-11},
    {8.40861484003422680e-06, 1.18021853173491351e+01, 1.18925651678560855e+05, -4.99999999889062519e-01, 5.65109265873003608e+00, 9.99999999964647834e-01, -3.53520054129231270e-11, 3.53524017633970217e-11, 1.06057205291440845e-10},
    {9.52546145488092680e-06, 1.16774737073643369e+01, 1.04981790560407288e+05, -4.99999999859050082e-01, 5.58873685375264362e+00, 9.99999999954633068e-01, -4.53666317758440271e-11, 4.53672079631820469e-11, 1.36101623891604295e-10},
    {1.07906495486541536e-05, 1.15527620973961014e+01, 9.26728270424668735e+04, -4.99999999820936181e-01, 5.52638104878758263e+00, 9.99999999941781348e-01, -5.82182212174045402e-11, 5.82190588392403301e-11, 1.74657176521110415e-10},
    {1.22238820904793673e-05, 1.14280504874488837e+01, 8.18070717393200903e+04, -4.99999999772539450e-01, 5.46402524383817134e+00, 9.99999999925288985e-01, -7.47104290008640695e-11, 7.47116466781802198e-11, 2.24134940040122435e-10},
    {1.38474790315638409e-05, 1.13033388775283488e+01, 7.22153105694506958e+04, -4.99999999711092491e-01, 5.40166943890862772e+00, 9.99999999904124581e-01, -9.58745675844860347e-11, 9.58763377602040258e-11, 2.87629013289804212e-10},
    {1.56867248972360267e-05, 1.11786272676416853e+01, 6.37481695582803804e+04, -4.99999999633085335e-01, 5.33931363400429948e+00, 9.99999999876964640e-01, -1.23034095633650702e-10, 1.23036668993213376e-10, 3.69110006994777947e-10},
    {1.77702625467542831e-05, 1.10539156577980062e+01, 5.62737886142480274e+04, -4.99999999534066653e-01, 5.27695782913197053e+00, 9.99999999842110743e-01, -1.57887374505581766e-10, 1.57891115477824333e-10, 4.73673346458402231e-10},
    {2.01305392329675452e-05, 1.09292040480088737e+01, 4.96757680512867009e+04, -4.99999999408391960e-01, 5.21460202430024111e+00, 9.99999999797383410e-01, -2.02613866518781890e-10, 2.02619304884495705e-10, 6.07857914694541044e-10},
    {2.28043119083832061e-05, 1.08044924382889498e+01, 4.38513558785788191e+04, -4.99999999248905092e-01, 5.15224621952002249e+00, 9.99999999739985657e-01, -2.60010414856974736e-10, 2.60018320773609718e-10, 7.80054962388437365e-10},
    {2.58332196468523436e-05, 1.06797808286568259e+01, 3.87098476279708557e+04, -4.99999999046534471e-01, 5.08989041480514537e+00, 9.99999999666328132e-01, -3.33666125538649729e-10, 3.33677618605589356e-10, 1.00103285592810658e-09},
    {2.92644320952823006e-05, 1.05550692191360707e+01, 3.41711737993162751e+04, -4.99999998789782463e-01, 5.02753461017314418e+00, 9.99999999571804854e-01, -4.28186785028673178e-10, 4.28203492838016735e-10, 1.28461047869740420e-09},
    {3.31513840538160133e-05, 1.04303576097565696e+01, 3.01646529258129667e+04, -4.99999998464078443e-01, 4.96517880564624559e+00, 9.99999999450504995e-01, -5.49482843565422324e-10, 5.49507132190826971e-10, 1.64852139687443089e-09},
    {3.75546076242080898e-05, 1.03056460005561910e+01, 2.66278908406308583e+04, -4.99999998050960681e-01, 4.90282300125261461e+00, 9.99999999294843400e-01, -7.05138967592309333e-10, 7.05174276655483786e-10, 2.11552283046370726e-09},
    {4.25426748855718527e-05, 1.01809343915829285e+01, 2.35058090029394189e+04, -4.99999997527041162e-01, 4.84046719702794359e+00, 9.99999999095086078e-01, -9.04888263036881297e-10, 9.04939592800284527e-10, 2.71481877921974109e-09},
    {4.81932657779335333e-05, 1.00562227828975903e+01, 2.07497867513054334e+04, -4.99999996862695695e-01, 4.77811139301744703e+00, 9.99999998838741910e-01, -1.16122081303486894e-09, 1.16129543249698346e-09, 3.48388629883950583e-09},
    {5.45943778239066751e-05, 9.93151117457721533e+00, 1.83169041266425738e+04, -4.99999996020407955e-01, 4.71575558927840355e+00, 9.99999998509781163e-01, -1.49016456761480386e-09, 1.49027304387931201e-09, 4.47081913385875261e-09},
    {6.18456965276711809e-05, 9.80679956671937880e+00, 1.61692734730764805e+04, -4.99999994952675109e-01, 4.65339978588335246e+00, 9.99999998087633735e-01, -1.91228739298427365e-09, 1.91244508766773675e-09, 5.73733526666047601e-09},
    {7.00601477926888843e-05, 9.68208795944765477e+00, 1.42734494076438532e+04, -4.99999993599360759e-01, 4.59104398292414739e+00, 9.99999997545902519e-01, -2.45398290677954948e-09, 2.45421215135523846e-09, 7.36263646008853487e-09},
    {7.93656565341982869e-05, 9.55737635291851007e+00, 1.25999079701919109e+04, -4.99999991884348793e-01, 4.52868818051708111e+00, 9.99999996850712947e-01, -3.14912045548087115e-09, 3.14945371359284607e-09, 9.44836115069696727e-09},
    {8.99071388736299672e-05, 9.43266474733002802e+00, 1.11225868421999166e+04, -4.99999989711316373e-01, 4.46633237880935585e+00, 9.99999995958595456e-01, -4.04116233752127990e-09, 4.04164680205402989e-09, 1.21249404224958222e-08},
    {1.01848758939694921e-04, 9.30795314293292009e+00, 9.81847947427933832e+03, -4.99999986958393150e-01, 4.40397657798726350e+00, 9.99999994813767334e-01, -5.18588055948759790e-09, 5.18658483532844263e-09, 1.55597545328837988e-08},
    {1.15376485421655279e-04, 9.18324154004445781e+00, 8.66727680163797959e+03, -4.99999983471417164e-01, 4.34162077828652038e+00, 9.99999993344645288e-01, -6.65484285323269486e-09, 6.65586667197779913e-09, 1.99676000602298680e-08},
    {1.30700987688375916e-04, 9.05852993906606940e+00, 7.65105096788764877e+03, -4.99999979055419208e-01, 4.27926498000532529e+00, 9.99999991459370130e-01, -8.53988571274607635e-09, 8.54137405488350341e-09, 2.56241222375979538e-08},
    {1.48060916574866178e-04, 8.93381834050554247e+00, 6.75397613177754374e+03, -4.99999973463874481e-01, 4.21690918352083344e+00, 9.99999989040064374e-01, -1.09588538243025768e-08, 1.09610174484275324e-08, 3.28830524654122724e-08},
    {1.67726620928505701e-04, 8.80910674500507440e+00, 5.96208200893368485e+03, -4.99999966385139161e-01, 4.15455338930996820e+00, 9.99999985935463021e-01, -1.40629642994169007e-08, 1.40661095851284509e-08, 4.21983289532142484e-08},
    {1.90004357793298860e-04, 8.68439515337669121e+00, 5.26303631047209637e+03, -4.99999957425339259e-01, 4.09219759797567573e+00, 9.99999981951458339e-01, -1.80462554976309765e-08, 1.80508278273222772e-08, 5.41524838077497024e-08},
    {2.15241061798009819e-04, 8.55968356664690688e+00, 4.64595269036858099e+03, -4.99999946086791214e-01, 4.02984181028005750e+00, 9.99999976838966353e-01, -2.31577102522933838e-08, 2.31643570737044126e-08, 6.94930717576082959e-08},
    {2.43829748022593098e-04, 8.43497198611309074e+00, 4.10122121072010941e+03, -4.99999931740795212e-01, 3.96748602718614807e+00, 9.99999970278358630e-01, -2.97168100711955508e-08, 2.97264725686064768e-08, 8.91794185893102706e-08},
    {2.76215632482589208e-04, 8.31026041341455191e+00, 3.62035868470729793e+03, -4.99999913593344447e-01, 3.90513024991060398e+00, 9.99999961859486142e-01, -3.81334907348027746e-08, 3.81475370863682569e-08, 1.14442612714017881e-07},
    {3.12903065546732764e-04, 8.18554885062215476e+00, 3.19587656662593008e+03, -4.99999890641920353e-01, 3.84277447999011734e+00, 9.99999951056046554e-01, -4.89337439312316295e-08, 4.89541630162163186e-08, 1.46862491444559329e-07},
    {3.54463386262956256e-04, 8.06083730035126855e+00, 2.82116433161870827e+03, -4.99999861621075847e-01, 3.78041871936509644e+00, 9.99999937192697308e-01, -6.27924611521691137e-08, 6.28221441275628554e-08, 1.88466436328191606e-07},
    {4.01543819909417515e-04, 7.93612576590407759e+00, 2.49038652896199847e+03, -4.99999824933920201e-01, 3.71806297048507872e+00, 9.99999919402858373e-01, -8.05755668032039490e-08, 8.06187164047302400e-08, 2.41856155711481204e-07},
    {4.54877557333478266e-04, 7.81141425144883250e+00, 2.19839190570269784e+03, -4.99999778565885566e-01, 3.65570723644147355e+00, 9.99999896574572000e-01, -1.03394065235613613e-07, 1.03456790732479712e-07, 3.10370382896853574e-07},
    {5.15295173045742590e-04, 7.68670276224552929e+00, 1.94063318541370563e+03, -4.99999719976234824e-01, 3.59335152113464718e+00, 9.99999867281042176e-01, -1.32673366869285526e-07, 1.32764548871328697e-07, 3.98293664233149212e-07},
    {5.83737559884883760e-04, 7.56199130492996385e+00, 1.71309625277043324e+03, -4.99999645961619721e-01, 3.53099582948417190e+00, 9.99999829691518793e-01, -1.70242207406271260e-07, 1.70374754900915806e-07, 5.11124293716757158e-07},
    {6.61270581686801743e-04, 7.43727988787108263e+00, 1.51223764112900813e+03, -4.99999552484560406e-01, 3.46864016769326122e+00, 9.99999781456971548e-01, -2.18446689727007645e-07, 2.18639367209036704e-07, 6.55918149405011790e-07},
    {7.49101672146358058e-04, 7.31256852162044080e+00, 1.33492934959090303e+03, -4.99999434457921277e-01, 3.40628454358125943e+00, 9.99999719563423373e-01, -2.80296535068509844e-07, 2.80576618260326579e-07, 8.41729933457077907e-07},
    {8.48598638368352857e-04, 7.18785721947716461e+00, 1.17841013018178455e+03, -4.99999285474216848e-01, 3.34392896700147402e+00, 9.99999640143808155e-01, -3.59652623890506655e-07, 3.60059759728102198e-07, 1.08017940873940290e-06},
    {9.61310961938325811e-04, 7.06314599819788480e+00, 1.04024248653267864e+03, -4.99999097465785414e-01, 3.28157345036604964e+00, 9.99999538236632346e-01, -4.61467459243971703e-07, 4.62059276076671957e-07, 1.38617804156476369e-06},
    {1.08899392923802367e-03, 6.93843487888840027e+00, 9.18274714397618482e+02, -4.99998860278386137e-01, 3.21921800930500712e+00, 9.99999407476417468e-01, -5.92093451898767471e-07, 5.92953713263545297e-07, 1.77886149107878210e-06},
    {1.23363596679068491e-03, 6.81372388812305463e+00, 8.10607392859246261e+02, -4.99998561136438369e-01, 3.15686266349330813e+00, 9.99999239696667486e-01, -7.59678105155844631e-07, 7.60928559963841265e-07, 2.28278625833309814e-06},
    {1.39748960733365713e-03, 6.68901305934931045e+00, 7.15563804385210915e+02, -4.99998183972730048e-01, 3.09450743768829017e+00, 9.99999024420677229e-01, -9.74670520658004587e-07, 9.76488124892986392e-07, 2.92946532714352950e-06},
    {1.58310656885780822e-03, 6.56430243464923091e+00, 6.31663823082796853e+02, -4.99997708588722500e-01, 3.03215236303025426e+00, 9.99998748208552168e-01, -1.25047047596738900e-06, 1.25311241969660960e-06, 3.75933882739508970e-06},
    {1.79337749290493960e-03, 6.43959206694744690e+00, 5.57600864510138194e+02, -4.99997109603262435e-01, 2.96979747867209198e+00, 9.99998393819913511e-01, -1.60426004869423430e-06, 1.60810012426993683e-06, 4.82430295509262003e-06},
    {2.03157696097392305e-03, 6.31488202277711697e+00, 4.92221538080441860e+02, -4.99996355137205528e-01, 2.90744283381995583e+00, 9.99997939140376824e-01, -2.05806889913113487e-06, 2.06365034715493569e-06, 6.19095529321075792e-06},
    {2.30141449008294330e-03, 6.19017238574289141e+00, 4.34507685183713249e+02, -4.99995405168691787e-01, 2.84508849028709987e+00, 9.99997355805321897e-01, -2.64013853101139137e-06, 2.64825082525738741e-06, 7.94475947612320147e-06},
    {2.60709230164956479e-03, 6.06546326085382148e+00, 3.83560523303676689e+02, -4.99994209478032581e-01, 2.78273452568789459e+00, 9.99996607435836071e-01, -3.38666895990660336e-06, 3.39845936790058093e-06, 1.01953896292045358e-05},
    {2.95337076333236420e-03, 5.94075477994115797e+00, 3.38586649204662365e+02, -4.99992705081682975e-01, 2.72038103742973769e+00, 9.99995647377890484e-01, -4.34405428114380768e-06, 4.36118993778867755e-06, 1.30835887885431471e-05},
    {3.34564252296994666e-03, 5.81604710842802408e+00, 2.98885683214966605e+02, -4.99990813030751102e-01, 2.65802814769863627e+00, 9.99994415805360415e-01, -5.57174296692492669e-06, 5.59664631235584128e-06, 1.67899701759737695e-05},
    {3.79001648911666449e-03, 5.69134045378209841e+00, 2.63839362190346833e+02, -4.99988434419929906e-01, 2.59567600968108403e+00, 9.99992836008623986e-01, -7.14589599746301133e-06, 7.18208675458965716e-06, 2.15463116903560136e-05},
    {4.29341296601675609e-03, 5.56663507606163321e+00, 2.32901911302006539e+02, -4.99985445416413044e-01, 2.53332481532260978e+00, 9.99990809640851963e-01, -9.16406322424596530e-06, 9.21665507175137621e-06, 2.76500498715155048e-05},
    {4.86367142456867099e-03, 5.44193130106245793e+00, 2.05591544708900585e+02, -4.99981691073818291e-01, 2.47097480499432010e+00, 9.99988210630815999e-01, -1.17511582704048011e-05, 1.18275800975954991e-05, 3.54828796428732817e-05},
    {5.50967258761326639e-03, 5.31722953669337883e+00, 1.81482962754703010e+02, -4.99976977641650777e-01, 2.40862627952586372e+00, 9.99984877390412086e-01, -1.50670880161103826e-05, 1.51781311596741362e-05, 4.55346228450509338e-05},
    {6.24147673079893366e-03, 5.19253029335404914e+00, 1.60200728849009721e+02, -4.99971063014324646e-01, 2.34627961516986216e+00, 9.99980602842450161e-01, -1.93164882754138446e-05, 1.94778268242303997e-05, 5.84338579763334266e-05},
    {7.07048035280439385e-03, 5.06783420926895456e+00, 1.41413422892057412e+02, -4.99963644882786218e-01, 2.28393528219308406e+00, 9.99975121663741917e-01, -2.47611375271063876e-05, 2.49955349889557683e-05, 7.49872262355200152e-05},
    {8.00959365476857678e-03, 4.94314208195030247e+00, 1.24828480195753656e+02, -4.99954346053483267e-01, 2.22159386794840952e+00, 9.99968093972776528e-01, -3.17357714579279081e-05, 3.20762829890301678e-05, 9.62298713168472351e-05},
    {9.07344159284222650e-03, 4.81845490722941516e+00, 1.10187635529455477e+02, -4.99942696280479659e-01, 2.15925610547446789e+00, 9.99959084481096827e-01, -4.06682097725793299e-05, 4.11628280337062547e-05, 1.23490166295743694e-04},
    {1.02785916348833769e-02, 4.69377392762017021e+00, 9.72629013429892666e+01, -4.99928109813100041e-01, 2.09692290890353528e+00, 9.99947535861429371e-01, -5.21049417446599374e-05, 5.28233353966668119e-05, 1.58472773793814231e-04},
    {1.16438117681870491e-02, 4.56910069216998860e+00, 8.58530175386103451e+01, -4.99909857689272041e-01, 2.03459541724035819e+00, 9.99932734749456431e-01, -6.67436083098419053e-05, 6.77868927772030272e-05, 2.03365231104892658e-04},
    {1.31903627762433220e-02, 4.44443713042656174e+00, 7.57803175075429607e+01, -4.99887033598868658e-01, 1.97227504841384649e+00, 9.99913768372347689e-01, -8.54741775871803688e-05, 8.69890777174245811e-05, 2.60974721485744275e-04},
    {1.49423293361942745e-02, 4.31978564371628693e+00, 6.68879616297747077e+01, -4.99858511896555502e-01, 1.90996356590986549e+00, 9.99889469264316655e-01, -1.09431050308520943e-04, 1.11630421058250915e-04, 3.34903577851679160e-04},
    {1.69269950932222392e-02, 4.19514921760898929e+00, 5.90374951588606507e+01, -4.99822896054300692e-01, 1.84766316077734416e+00, 9.99858344861498938e-01, -1.40058865345725557e-04, 1.43251411656503184e-04, 4.29774482874868626e-04},
    {1.91752675529600590e-02, 4.07053156025098328e+00, 5.21066924657794317e+01, -4.99778455504095886e-01, 1.78537655237344373e+00, 9.99818487934003297e-01, -1.79195416905529164e-04, 1.83828715087973077e-04, 5.51519430044579147e-04},
    {2.17221594088386726e-02, 3.94593727220302970e+00, 4.59876540760170727e+01, -4.99723048426119643e-01, 1.72310711188845489e+00, 9.99767462774865390e-01, -2.29175855897640414e-04, 2.35898594371532444e-04, 7.07750485678107261e-04},
    {2.46073338001565091e-02, 3.82137205454072859e+00, 4.05851268715178648e+01, -4.99654027581943883e-01, 1.66085901347939235e+00, 9.99702160780339910e-01, -2.92963235990666387e-04, 3.02715203329510677e-04, 9.08235487760648136e-04},
    {2.78757219922592323e-02, 3.69684296328052220e+00, 3.58150213052263879e+01, -4.99568125773527660e-01, 1.59863741875349730e+00, 9.99618617473739035e-01, -3.74311478799261254e-04, 3.88453573722597292e-04, 1.16550834755652132e-03},
    {3.15782230980578629e-02, 3.57235871970072960e+00, 3.16031025447839262e+01, -4.99461316926662291e-01, 1.53644870138703360e+00, 9.99511781090561491e-01, -4.77967956030093510e-04, 4.98469862846880507e-04, 1.49565198437364181e-03},
    {3.57724967377571479e-02, 3.44793008784443433e+00, 2.78838351712892702e+01, -4.99328648156901644e-01, 1.47430071984376632e+00, 9.99375220496987460e-01, -6.09924077496397940e-04, 6.39634928528657861e-04, 1.91930263232851107e-03},
    {4.05238609810046266e-02, 3.32357033242131461e+00, 2.45993634510575916e+01, -4.99164037488564971e-01, 1.41220314746637476e+00, 9.99200757398118200e-01, -7.77723450968007641e-04, 8.20761752795657554e-04, 2.46293795803099709e-03},
    {4.59063095552537936e-02, 3.19929577245546826e+00, 2.16986113101944333e+01, -4.98960031185218589e-01, 1.35016787063512478e+00, 9.98978004454500246e-01, -9.90838200043625507e-04, 1.05315289095580730e-03, 3.16052894022952066e-03},
    {5.20036641614829986e-02, 3.07512644832150261e+00, 1.91364880063711134e+01, -4.98707513949913417e-01, 1.28820946718579465e+00, 9.98693787030976443e-01, -1.26112465591239425e-03, 1.35130128213481145e-03, 4.05565782210174936e-03},
    {5.89108798424595945e-02, 2.95108692220441471e+00, 1.68731871383568404e+01, -4.98395364622595816e-01, 1.22634577879090934e+00, 9.98331421850722656e-01, -1.60336951227070795e-03, 1.73378678628405801e-03, 5.20423295433192299e-03},
    {6.67355237322520278e-02, 2.82720723439798194e+00, 1.48735680871218801e+01, -4.98010049525501541e-01, 1.16459859243624009e+00, 9.97869820879528691e-01, -2.03593609650433958e-03, 2.22442214443822374e-03, 6.67796762428172520e-03},
    {7.55994502157822934e-02, 2.70352404004693359e+00, 1.31066102651021339e+01, -4.97535145406940549e-01, 1.10299444731999641e+00, 9.97282383478477974e-01, -2.58151685097099100e-03, 2.85371619207307756e-03, 8.56883601829178457e-03},
    {8.56406985859388681e-02, 2.58008195268065421e+00, 1.15449316822032149e+01, -4.96950784179824190e-01, 1.04156558425041501e+00, 9.96535634545497429e-01, -3.26799126987884284e-03, 3.66073963912620474e-03, 1.09947777382438938e-02},
    {9.70156427507526536e-02, 2.45693512181066254e+00, 1.01643643355909408e+01, -4.96233012575065524e-01, 9.80351054617798479e-01, 9.95587561550711708e-01, -4.12937677040838089e-03, 4.69550012816815927e-03, 1.41069957273471155e-02},
    {1.09901426468360847e-01, 2.33414907145698658e+00, 8.94357981033436644e+00, -4.95353061739138678e-01, 9.19398004858923867e-01, 9.94385599914126894e-01, -5.20684107360385416e-03, 6.02195909814229064e-03, 1.80992844916498738e-02},
    {1.24498722034049131e-01, 2.21180282403804807e+00, 7.86375925264381692e+00, -4.94276525098347963e-01, 8.58763149469849885e-01, 9.92864215387319060e-01, -6.54971570120405164e-03, 7.72185352415777609e-03, 2.32199400074286598e-02},
    {1.41034855380823054e-01, 2.08999132869547255e+00, 6.90830255808666482e+00, -4.92962447993101294e-01, 7.98514440351185573e-01, 9.90942035908750296e-01, -8.21640742469353404e-03, 9.89952075780579747e-03, 2.97869437845401305e-02},
    {1.59767346261190823e-01, 1.96882820366783307e+00, 6.06257221345044162e+00, -4.91362340269796083e-01, 7.38732931699018547e-01, 9.88518496535327640e-01, -1.02750433903755975e-02, 1.26879635389690257e-02, 3.82072850849589571e-02},
    {1.80987918641946938e-01, 1.84844878733797535e+00, 5.31366775107086386e+00, -4.89419133931267902e-01, 6.79514826703353725e-01, 9.85469983251186177e-01, -1.28036010217735963e-02, 1.62564324758540033e-02, 4.90014900194294806e-02},
    {2.05027043766458611e-01, 1.72901347034067632e+00, 4.65022722533706645e+00, -4.87066122899945275e-01, 6.20973673720365604e-01, 9.81645499656913834e-01, -1.58891603988482941e-02, 2.08198402873239902e-02, 6.28346641650251586e-02},
    {2.32259086634254347e-01, 1.61071124968085777e+00, 4.06225250848642627e+00, -4.84225941778991642e-01, 5.63242653950932981e-01, 9.76861940994451117e-01, -1.96257703588937002e-02, 2.66503476522041705e-02, 8.05556209474096729e-02},
    {2.63108136044845453e-01, 1.49376340310823741e+00, 3.54095553155371690e+00, -4.80809665960389099e-01, 5.06476868573924155e-01, 9.70899150141474876e-01, -2.41102387785689411e-02, 3.40914609384813522e-02, 1.03245945707089795e-01},
    {2.98054608997947779e-01, 1.37842712606552875e+00, 3.07862287071558915e+00, -4.76716147008821201e-01, 4.50855489528353803e-01, 9.63495058388617820e-01, -2.94349474217138925e-02, 4.35749358010504989e-02, 1.32281102129028910e-01},
    {3.37642732301435877e-01, 1.26499890292241379e+00, 2.66849630341510569e+00, -4.71831734866499763e-01, 3.96583584027957070e-01, 9.54341388021196058e-01, -3.56765688588564778e-02, 5.56406550987513862e-02, 1.69405861965837456e-01},
    {3.82489017899280526e-01, 1.15381729859912419e+00, 2.30466713723113115e+00, -4.66030581006044387e-01, 3.43893358796539872e-01, 9.43080619741690218e-01, -4.28793625451692265e-02, 7.09593979714503859e-02, 2.16826323931287313e-01},
    {4.33291863907043606e-01, 1.04526475776937344e+00, 1.98198225354850943e+00, -4.59175761560208062e-01, 2.93044498104582718e-01, 9.29305205922317135e-01, -5.10316128394599430e-02, 9.03579753159056975e-02, 2.77320407922549694e-01},
    {4.90842430873341840e-01, 9.39767891558490387e-01, 1.69595991631118914e+00, -4.51121501715888773e-01, 2.44323194921300779e-01, 9.12560329819119720e-01, -6.00338467294389347e-02, 1.14845493632321563e-01, 3.54367691721586719e-01},
    {5.56036962644972599e-01, 8.37795625747478900e-01, 1.44271348607009031e+00, -4.41716814145476921e-01, 1.98039405801001017e-01, 8.92351842189246125e-01, -6.96578861884762507e-02, 1.45638429433031430e-01, 4.52297389001999228e-01},
    {6.29890743710434187e-01, 7.39854496188439570e-01, 1.21888126918060102e+00, -4.30810872838499670e-01, 1.54521811674969978e-01, 8.68161293537483281e-01, -7.94967560367393633e-02, 1.84180656888294131e-01, 5.76449570296169611e-01},
    {7.13553910381698242e-01, 6.46480330766897038e-01, 1.02156084613416942e+00, -4.18260412746081944e-01, 1.14109959010407574e-01, 8.39470127816589029e-01, -8.89072315225528514e-02, 2.32152512844269132e-01, 7.33338639771706102e-01},
    {8.08329362044219790e-01, 5.58225586144625474e-01, 8.48246393735505810e-01, -4.03939354221975355e-01, 7.71431159613250456e-02, 8.05794970882594774e-01, -9.69496188975019352e-02, 2.91460439337308475e-01, 9.30798697785535922e-01},
    {9.15693051409804393e-01, 4.75641753234932851e-01, 6.96767781558071508e-01, -3.87750675783263610e-01, 4.39455387258346000e-02, 7.66735346381717808e-01, -1.02333372596392011e-01, 3.64195934640172414e-01, 1.17807686631456532e+00},
    {1.03731696975561039e+00, 3.99256553860253771e-01, 5.65230624588049957e-01, -3.69640277074420320e-01, 1.48081383929167028e-02, 7.22033863775868645e-01, -1.03382264530463383e-01, 4.52550007917799313e-01, 1.48582247134249745e+00},
    {1.17509518510194133e+00, 3.29546164193471658e-01, 4.51957046101173709e-01, -3.49612172667315868e-01, -1.00330042369221120e-02, 6.71646741981177464e-01, -9.80384387123814649e-02, 5.58668077325263579e-01, 1.86589786009882874e+00},
    {1.33117333882534550e+00, 2.66903441508179684e-01, 3.55427662869381156e-01, -3.27743842930976859e-01, -3.04202007113985838e-02, 6.15819351440765272e-01, -8.39294240162950372e-02, 6.84431873102174348e-01, 2.33091364468719942e+00},
    {1.50798206006238766e+00, 2.11604082523845716e-01, 2.74226224904514704e-01, -3.04199981591669222e-01, -4.62979495339117600e-02, 5.55157406349629401e-01, -5.85236203969498187e-02, 8.31161566903791504e-01, 2.89337440004675406e+00},
    {1.70827481827170247e+00, 1.63773721366742731e-01, 2.06989338189122185e-01, -2.79242311511560759e-01, -5.77342950724090212e-02, 4.90680054121493625e-01, -1.93944685676959161e-02, 9.99245423189316861e-01, 3.56432318124466629e+00},
    {1.93517080343812364e+00, 1.23360010064313200e-01, 1.52364603192687187e-01, -2.53232741319068810e-01, -6.49363656273777984e-02, 4.23837498074052188e-01, 3.54024455563703017e-02, 1.18772744940826591e+00, 4.35141411791979138e+00},
    {2.19220350169895184e+00, 9.01144419689564463e-02, 1.08981058911337553e-01, -2.26627111489910993e-01, -6.82563347604772802e-02, 3.56474678222807373e-01, 1.06864550759405014e-01, 1.39391519431379018e+00, 5.25644557910151011e+00},
    {2.48337572286797270e+00, 6.35887285480500469e-02, 7.54357145083805886e-02, -1.99957357277779468e-01, -6.81843143648647176e-02, 2.90726050056440199e-01, 1.94556977002296683e-01, 1.61310487688941628e+00, 6.27257177675539435e+00},
    {2.81322193680946908e+00, 4.31495685952604444e-02, 5.02988732000370503e-02, -1.73801276775741365e-01, -6.53258540902404566e-02, 2.28836511876601867e-01, 2.96220776979545575e-01, 1.83854775322634190e+00, 7.38167680127020720e+00},
    {3.18687888943608577e+00, 2.80134318022947672e-02, 3.21387404527420997e-02, -1.48741257295375767e-01, -6.03639127465405018e-02, 1.72920499909985786e-01, 4.07622735642532541e-01, 2.06178173582256097e+00, 8.55269400701647875e+00},
    {3.61016559804439874e+00, 1.72995968668551506e-02, 1.95625968228809143e-02, -1.25316025648626733e-01, -5.40082143908857948e-02, 1.24692843186029356e-01, 5.22790819703142895e-01, 2.27340513333108429e+00, 9.74186697655846068e+00},
    {4.08967397176786029e+00, 1.00956803635919370e-02, 1.12681761372971471e-02, -1.03972137456145475e-01, -4.69382285462767654e-02, 8.52250225849188886e-02, 6.34712751480083881e-01, 2.46426270631024602e+00, 1.08958881097345053e+01},
    {4.63287146839347663e+00, 5.52630038446758499e-03, 6.09583413661473131e-03, -8.50235980543839059e-02, -3.97486488349581626e-02, 5.47897510939193907e-02, 7.36439336599563510e-01, 2.62685983441172466e+00, 1.19583194566967670e+01},
    {5.24821738623243128e+00, 2.81365384851635847e-03, 3.07084779518919338e-03, -6.86277618481348356e-02, -3.29070539998092410e-02, 3.28461355129359631e-02, 8.22359459490230593e-01, 2.75666718846435854e+00, 1.28786290235913974e+01},
    {5.94529460207613525e+00, 1.31975564734892526e-03, 1.42670993412816324e-03, -5.47829422912681566e-02, -2.67315933219596166e-02, 1.81836906012869254e-02, 8.89274471494415408e-01, 2.85290709029184164e+00, 1.36218051241962836e+01},
    {6.73495880681310322e+00, 5.64155768985130776e-04, 6.04673147119112265e-04, -4.33483131012648848e-02, -2.13920786661398743e-02, 9.19395893268550903e-03, 9.36890441154465514e-01, 2.91850252328909443e+00, 1.41754776720749689e+01},
    {7.62950756277569209e+00, 2.17098222203774682e-04, 2.30910729389997480e-04, -3.40810911054841570e-02, -1.69319964416401909e-02, 4.19307836955051718e-03, 9.67522976793483092e-01, 2.95913682005438217e+00, 1.45516075843961783e+01},
    {8.64287181557320139e+00, 7.41693148267370686e-05, 7.83482309641587982e-05, -2.66817370900998795e-02, -1.33037838876365715e-02, 1.70080630188454906e-03, 9.85123769505286684e-01, 2.98172215690151754e+00, 1.47815618579003374e+01},
    {9.79083284285431255e+00, 2.21440884945677665e-05, 2.32486296580867229e-05, -2.08367777531593343e-02, -1.04073168323323834e-02, 6.03879501950097030e-04, 9.94031554469099521e-01, 2.99282379546519950e+00, 1.49062308420331391e+01},
    {1.10912680185755050e+01, 5.67545499414105738e-06, 5.92599833618008894e-06, -1.62512737876493764e-02, -8.12279916632761834e-03, 1.84329714401218443e-04, 9.97940304871618777e-01, 2.99757164544281629e+00, 1.49651826813608828e+01},
    {1.25644292201001928e+01, 1.22367141846719320e-06, 1.27146720763673941e-06, -1.26676361083467633e-02, -6.33320621846414789e-03, 4.73957331014342160e-05, 9.99401005546873500e-01, 2.99930621408067077e+00, 1.49890489486076746e+01},
    {1.42332582138055557e+01, 2.16916861491351274e-07, 2.24411588757501802e-07, -9.87211963125785193e-03, -4.93595135719817994e-03, 1.00315329031779583e-05, 9.99856560073525524e-01, 2.99983649700771915e+00, 1.49971502405314361e+01},
    {1.61237439307447019e+01, 3.08038735717675864e-08, 3.17451353777809800e-08, -7.69300916486291043e-03, -3.84648918049466894e-03, 1.70272968704370185e-06, 9.99972446185778630e-01, 2.99996904072640458e+00, 1.49994025362801260e+01},
    {1.82653271962749635e+01, 3.40267407277732873e-09, 3.49460931923296830e-09, -5.99480151948430379e-03, -2.99739905840511580e-03, 2.25032672456511771e-07, 9.99995878023899110e-01, 2.99999542795855412e+00, 1.49999020639025584e+01},
    {2.06913592165672178e+01, 2.82786763958913816e-10, 2.89541366480253195e-10, -4.67145237813442176e-03, -2.33572604767382863e-03, 2.23946168065008620e-08, 9.99999535592518085e-01, 2.99999949080328454e+00, 1.49999878661565855e+01},
    {2.34396209620778997e+01, 1.70262074249549176e-11, 1.73856817384195757e-11, -3.64022999983691902e-03, -1.82011499140535566e-03, 1.61583281734687748e-09, 9.99999962059375913e-01, 2.99999995882771042e+00, 1.49999989063744223e+01},
    {2.65529115364242330e+01, 7.11563232000743042e-13, 7.24840538117521505e-13, -2.83664963884931731e-03, -1.41832481906887706e-03, 8.09812617444841343e-11, 9.99999997846772626e-01, 2.99999999768481018e+00, 1.49999999313276362e+01},
    {3.00797146934181256e+01, 1.96649669156459551e-14, 1.99892169293464311e-14, -2.21045954164982798e-03, -1.10522977081508136e-03, 2.68548613709781805e-12, 9.99999999919134908e-01, 2.99999999991376409e+00, 1.49999999971390210e+01},
    {3.40749538820358779e+01, 3.40178915955246891e-16, 3.45134948773377494e-16, -1.72250083941452169e-03, -8.61250419707090733e-04, 5.57741122757258094e-14, 9.99999999998097855e-01, 2.99999999999798650e+00, 1.49999999999251727e+01},
    {3.86008475777513382e+01, 3.46128849774319573e-18, 3.50583971822233590e-18, -1.34225896735583154e-03, -6.71129483677914145e-04, 6.81662466142344810e-16, 9.99999999999973688e-01, 2.99999999999997247e+00, 1.49999999999988454e+01},
    {4.37278782204401963e+01, 1.93053161987129732e-20, 1.95248258456962955e-20, -1.04595544699948376e-03, -5.22977723499741770e-04, 4.56879929702293611e-18, 9.99999999999999778e-01, 3.00000000000000000e+00, 1.49999999999999893e+01},
    {4.95358898482778898e+01, 5.44943233426933137e-23, 5.50416505730081320e-23, -8.15060896380552730e-04, -4.07530448190276365e-04, 1.55037336958820382e-20, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {5.61153315212470645e+01, 7.11183040278548370e-26, 7.17492096715804401e-26, -6.35136292577668377e-04, -3.17568146288834188e-04, 2.43317794988706185e-23, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {6.35686658982857935e+01, 3.87320238896950488e-29, 3.90354913208316845e-29, -4.94930025401388763e-04, -2.47465012700694381e-04, 1.59404652044017266e-26, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {7.20119649040623813e+01, 7.83808413662185251e-33, 7.89231986673435544e-33, -3.85674276381972451e-04, -1.92837138190986225e-04, 3.88145939742669655e-30, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {8.15767173349439076e+01, 5.16769881202083173e-37, 5.19927677053624094e-37, -3.00536722018681236e-04, -1.50268361009340618e-04, 3.07991991550727896e-34, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {9.24118765542790896e+01, 9.56409085529544983e-42, 9.61569944186389358e-42, -2.34193273476917001e-04, -1.17096636738458500e-04, 6.86173666325978128e-39, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.04686180166079978e+02, 4.19728799878296109e-47, 4.21728757675086873e-47, -1.82495133950468766e-04, -9.12475669752343829e-05, 3.62566624868381727e-44, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.18590777791727177e+02, 3.60793103641966914e-53, 3.62311092041150347e-53, -1.42209353074701739e-04, -7.11046765373508693e-05, 3.75298899472230583e-50, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.34342207872473352e+02, 4.89183197007806881e-60, 4.91000494687016087e-60, -1.10816653924670399e-04, -5.54083269623351993e-05, 6.12849295580921378e-57, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.52185769855959023e+02, 8.18610466323971538e-68, 8.21295587470960023e-68, -8.63538896812870478e-05, -4.31769448406435239e-05, 1.23531680888330463e-64, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.72399344282299353e+02, 1.28054323470666924e-76, 1.28425176669510071e-76, -6.72912779712427203e-05, -3.36456389856213601e-05, 2.32789584575639618e-73, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {1.95297720260558265e+02, 1.36682166047680488e-86, 1.37031653200567833e-86, -5.24367357129519157e-05, -2.62183678564759578e-05, 2.99359481831331028e-83, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {2.21237497728044360e+02, 6.96885278425095050e-98, 6.98458477667164292e-98, -4.08613320348142083e-05, -2.04306660174071041e-05, 1.83904723972308697e-94, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {2.50622640836074709e+02, 1.13319240487618710e-110, 1.13545091293906164e-110, -3.18411974536193955e-05, -1.59205987268096978e-05, 3.60346045940155678e-107, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {2.83910768945956249e+02, 3.71875720150807771e-125, 3.72530062024383598e-125, -2.48122565954666413e-05, -1.24061282977333206e-05, 1.42504493442157245e-121, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {3.21620283205801229e+02, 1.46657888847972200e-141, 1.46885710676986989e-141, -1.93349536636002665e-05, -9.66747683180013326e-06, 6.77294273469271233e-138, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {3.64338439691486371e+02, 3.86353402289028871e-160, 3.86883251707372998e-160, -1.50667647553617657e-05, -7.53338237768088285e-06, 2.15041096757965687e-156, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {4.12730494836004880e+02, 3.49557695063831937e-181, 3.49980908850644343e-181, -1.17407780821722020e-05, -5.87038904108610101e-06, 2.34499063228934165e-177, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {4.67550065570408151e+02, 5.11230082756967082e-205, 5.11776502645762658e-205, -9.14900260361192816e-06, -4.57450130180596408e-06, 4.13373386019417875e-201, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {5.29650865516374324e+02, 5.14652951089739279e-232, 5.15138563897182861e-232, -7.12936127870433100e-06, -3.56468063935216550e-06, 5.01603603604350305e-228, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
    {6.00000000000003183e+02, 1.35582853099053284e-262, 1.35695791810848293e-262, -5.55555555555549653e-06, -2.77777777777774826e-06, 1.59288832835052868e-258, 1.00000000000000000e+00, 3.00000000000000000e+00, 1.50000000000000000e+01},
};

inline constexpr double kK0At1 = 4.21024438240708343e-01;
inline constexpr double kK1At1 = 6.01907230197234577e-01;
inline constexpr double kK0At600 = 1.35582853099485233e-262;
inline constexpr double kK1At600 = 1.35695791811280609e-262;
inline constexpr double kG1At2 = -2.46240245433944127e-01;
inline constexpr double kG2At2 = -6.61731863422053562e-02;
inline constexpr double kG1At1em6 = -4.99999999998164801e-01;
inline constexpr double kG2At1em6 = 6.71572103681412713e+00;
inline constexpr double kK1mAt1em6 = -7.21572103681229176e-06;
inline constexpr double kK1mAt03 = -2.77341299876008363e-01;
inline constexpr double kH1mAt1em7 = -4.99999966666667934e-15;
inline constexpr double kH2At1em5 = -4.99993333370833226e-11;
inline constexpr double kH4At01 = 1.49875199064735086e-02;

}  // namespace csg::testref
